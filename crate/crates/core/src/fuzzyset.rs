//! Finite-universe fuzzy sets over the min/max lattice.
//!
//! Every operation here is built from comparisons, so no arithmetic rounding
//! ever enters a membership value: results only contain values that were
//! already present in an operand (or 0).

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A membership or possibility degree in `[0, 1]`.
///
/// `-0.0` is normalized to `0.0` so that bitwise equality, hashing and
/// ordering agree with numeric equality.
#[derive(Clone, Copy, Default)]
pub struct Degree(f64);

impl Degree {
    pub const ZERO: Degree = Degree(0.0);
    pub const ONE: Degree = Degree(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Degree(value + 0.0))
        } else {
            Err(Error::DegreeOutOfRange(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn min(self, other: Degree) -> Degree {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Degree) -> Degree {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0.0
    }
}

impl PartialEq for Degree {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits()
    }
}

impl Eq for Degree {}

impl Hash for Degree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // NaN is excluded at construction.
        self.0.partial_cmp(&other.0).expect("degree is never NaN")
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shortest decimal that round-trips to the same binary64 value.
impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<f64> for Degree {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Degree::new(value)
    }
}

/// Meet over an iterator; the empty meet is 1.
pub fn meet_all(degrees: impl IntoIterator<Item = Degree>) -> Degree {
    degrees.into_iter().fold(Degree::ONE, Degree::min)
}

/// Join over an iterator; the empty join is 0.
pub fn join_all(degrees: impl IntoIterator<Item = Degree>) -> Degree {
    degrees.into_iter().fold(Degree::ZERO, Degree::max)
}

/// An ordered, duplicate-free, nonempty list of symbol names.
#[derive(Clone)]
pub struct Universe {
    symbols: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateName(s.clone()));
            }
        }
        Ok(Universe { symbols, index })
    }

    pub fn shared<I, S>(symbols: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Universe::new(symbols).map(Arc::new)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, i: usize) -> &str {
        &self.symbols[i]
    }

    pub fn position(&self, symbol: &str) -> Option<usize> {
        self.index.get(symbol).copied()
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.symbols).finish()
    }
}

fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A fuzzy subset of a finite universe, stored densely in universe order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FuzzySet {
    universe: Arc<Universe>,
    grades: Vec<Degree>,
}

impl Hash for Universe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl FuzzySet {
    pub fn empty(universe: Arc<Universe>) -> Self {
        let grades = vec![Degree::ZERO; universe.len()];
        FuzzySet { universe, grades }
    }

    /// Crisp singleton `1/x`.
    pub fn singleton(universe: Arc<Universe>, position: usize) -> Self {
        let mut set = FuzzySet::empty(universe);
        set.grades[position] = Degree::ONE;
        set
    }

    pub fn from_grades(universe: Arc<Universe>, grades: Vec<Degree>) -> Result<Self> {
        if grades.len() != universe.len() {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                found: grades.len(),
            });
        }
        Ok(FuzzySet { universe, grades })
    }

    /// Builds a set from `(symbol, degree)` pairs; unlisted symbols get 0.
    pub fn from_pairs<S: AsRef<str>>(universe: Arc<Universe>, pairs: &[(S, f64)]) -> Result<Self> {
        let mut set = FuzzySet::empty(universe);
        for (symbol, value) in pairs {
            let symbol = symbol.as_ref();
            let i = set
                .universe
                .position(symbol)
                .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))?;
            set.grades[i] = Degree::new(*value)?;
        }
        Ok(set)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn grades(&self) -> &[Degree] {
        &self.grades
    }

    pub fn grade(&self, position: usize) -> Degree {
        self.grades[position]
    }

    pub fn grade_of(&self, symbol: &str) -> Option<Degree> {
        self.universe.position(symbol).map(|i| self.grades[i])
    }

    fn check(&self, other: &FuzzySet) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn zip_with(&self, other: &FuzzySet, op: impl Fn(Degree, Degree) -> Degree) -> Result<Self> {
        self.check(other)?;
        let grades = self
            .grades
            .iter()
            .zip(&other.grades)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(FuzzySet {
            universe: self.universe.clone(),
            grades,
        })
    }

    pub fn union(&self, other: &FuzzySet) -> Result<Self> {
        self.zip_with(other, Degree::max)
    }

    pub fn intersect(&self, other: &FuzzySet) -> Result<Self> {
        self.zip_with(other, Degree::min)
    }

    /// `(λ·A)(x) = λ ∧ A(x)`.
    pub fn scale(&self, lambda: Degree) -> Self {
        FuzzySet {
            universe: self.universe.clone(),
            grades: self.grades.iter().map(|&g| g.min(lambda)).collect(),
        }
    }

    pub fn height(&self) -> Degree {
        join_all(self.grades.iter().copied())
    }

    /// Positions with positive membership, in universe order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.grades.len())
            .filter(|&i| self.grades[i].is_positive())
            .collect()
    }

    pub fn support_names(&self) -> Vec<&str> {
        self.support()
            .into_iter()
            .map(|i| self.universe.name(i))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.iter().all(|g| g.is_zero())
    }

    pub fn is_subset(&self, other: &FuzzySet) -> Result<bool> {
        self.check(other)?;
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b))
    }

    /// Exact (bitwise) equality of memberships.
    pub fn equals(&self, other: &FuzzySet) -> Result<bool> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    /// `height(self ∩ other)`, without materializing the intersection.
    pub fn overlap(&self, other: &FuzzySet) -> Result<Degree> {
        self.check(other)?;
        Ok(join_all(
            self.grades.iter().zip(&other.grades).map(|(&a, &b)| a.min(b)),
        ))
    }
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Zadeh notation, e.g. `0.1/3 + 0.6/4 + 1/5`; the empty set prints as `0`.
impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.support() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}/{}", self.grades[i], self.universe.name(i))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
