//! Closed-form bounds on `sat(n, C_k)` and `ssat(n, C_k)` in exact rational
//! arithmetic, and consistency checks between bounds and observed values.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::ToPrimitive;

pub type Rational = Ratio<i64>;

/// The quantity a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// `sat(n, C_k)`
    Sat,
    /// `ssat(n, C_k)`
    Ssat,
    /// Edge count of any `C_k`-semisaturated graph with minimum degree at
    /// least 2.
    MinDegreeTwoSsat,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Sat => "sat",
            Quantity::Ssat => "ssat",
            Quantity::MinDegreeTwoSsat => "ssat/mindeg2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// quantity > value
    LowerStrict,
    /// quantity >= value
    Lower,
    /// quantity <= value
    Upper,
    /// quantity < value
    UpperStrict,
    /// quantity = value
    Exact,
}

impl BoundKind {
    pub fn is_lower(self) -> bool {
        matches!(self, BoundKind::LowerStrict | BoundKind::Lower)
    }

    pub fn is_upper(self) -> bool {
        matches!(self, BoundKind::UpperStrict | BoundKind::Upper)
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::LowerStrict => "lower-strict",
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::UpperStrict => "upper-strict",
            BoundKind::Exact => "exact",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub quantity: Quantity,
    pub kind: BoundKind,
    pub value: Rational,
    /// Whether `(n, k)` lies in the regime where the bound is stated.
    pub applicable: bool,
    /// Earlier results shown for comparison only; never asserted.
    pub reference_only: bool,
    /// The value omits an additive term of unspecified size.
    pub additive_unspecified: bool,
    pub formula: &'static str,
}

impl BoundEntry {
    /// Whether an integer value of the quantity is allowed by this entry.
    pub fn admits(&self, x: i64) -> bool {
        let x = Rational::from_integer(x);
        match self.kind {
            BoundKind::LowerStrict => x > self.value,
            BoundKind::Lower => x >= self.value,
            BoundKind::Upper => x <= self.value,
            BoundKind::UpperStrict => x < self.value,
            BoundKind::Exact => x == self.value,
        }
    }

    /// Least integer admitted by a lower (or exact) bound.
    pub fn least_integer(&self) -> Option<i64> {
        match self.kind {
            BoundKind::LowerStrict => Some(self.value.floor().to_integer() + 1),
            BoundKind::Lower | BoundKind::Exact => Some(self.value.ceil().to_integer()),
            _ => None,
        }
    }

    /// Greatest integer admitted by an upper (or exact) bound.
    pub fn greatest_integer(&self) -> Option<i64> {
        match self.kind {
            BoundKind::UpperStrict => Some(self.value.ceil().to_integer() - 1),
            BoundKind::Upper | BoundKind::Exact => Some(self.value.floor().to_integer()),
            _ => None,
        }
    }

    /// Takes part in consistency checks and search floors.
    pub fn is_assertable(&self) -> bool {
        self.applicable && !self.reference_only && !self.additive_unspecified
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTable {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundTable {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn applicable(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.applicable)
    }

    /// Least edge count allowed for `quantity` by the assertable lower
    /// bounds on it. Lower bounds on `ssat` also bound `sat`. Exact values
    /// are not used.
    pub fn lower_floor(&self, quantity: Quantity) -> Option<i64> {
        self.entries
            .iter()
            .filter(|e| e.is_assertable() && e.kind.is_lower())
            .filter(|e| e.quantity == quantity || (quantity == Quantity::Sat && e.quantity == Quantity::Ssat))
            .filter_map(BoundEntry::least_integer)
            .max()
    }

    /// CSV with columns `name,kind,numerator,denominator,applicable`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,kind,numerator,denominator,applicable\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                e.name,
                e.kind,
                e.value.numer(),
                e.value.denom(),
                e.applicable
            ));
        }
        out
    }
}

impl fmt::Display for BoundTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bounds for n = {}, k = {}", self.n, self.k)?;
        writeln!(
            f,
            "{:<24} {:<13} {:<12} {:>10} {:>10}  {:<10} formula",
            "name", "kind", "of", "value", "decimal", "applies"
        )?;
        for e in &self.entries {
            let mut applies = if e.applicable { "yes" } else { "no" }.to_string();
            if e.reference_only {
                applies.push_str(" (ref)");
            }
            let value = if e.value.is_integer() {
                e.value.numer().to_string()
            } else {
                format!("{}/{}", e.value.numer(), e.value.denom())
            };
            let decimal = e.value.to_f64().unwrap_or(f64::NAN);
            let suffix = if e.additive_unspecified { " + O(k^2)" } else { "" };
            writeln!(
                f,
                "{:<24} {:<13} {:<12} {:>10} {:>10.3}  {:<10} {}{}",
                e.name,
                e.kind.to_string(),
                e.quantity.to_string(),
                value,
                decimal,
                applies,
                e.formula,
                suffix
            )?;
        }
        for note in conjectures(self.k) {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}

/// Open conjectures about the asymptotics; informational only.
pub fn conjectures(k: usize) -> Vec<String> {
    let mut notes = Vec::new();
    if k == 5 {
        notes.push("conjectured: ssat(n,C_5) = 11n/8 + O(1)".to_string());
    }
    if k >= 7 {
        notes.push(format!(
            "conjectured for large k: sat(n,C_{k}) = (1 + 1/{})n + O(k^2)",
            k - 4
        ));
    }
    if k > 5 {
        notes.push(format!(
            "conjectured for large k: ssat(n,C_{k}) = (1 + 1/{})n + O(k)",
            2 * k - 10
        ));
    }
    notes
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x)
}

fn frac(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// Evaluates every bound at `(n, k)`. Entries outside their regime are kept
/// with `applicable = false`; their value is still computed where the
/// formula is defined, and 0 otherwise.
pub fn eval_bounds(n: usize, k: usize) -> BoundTable {
    let (ni, ki) = (n as i64, k as i64);
    let n_r = int(ni);
    let mut entries = Vec::new();
    let mut push = |name, quantity, kind, value: Option<Rational>, applicable: bool, formula| {
        entries.push(BoundEntry {
            name,
            quantity,
            kind,
            value: value.unwrap_or_else(|| int(0)),
            applicable: applicable && value.is_some(),
            reference_only: false,
            additive_unspecified: false,
            formula,
        });
    };
    let ratio = |a: i64, b: i64| (b > 0).then(|| frac(a, b));

    let sat_regime = k >= 7 && n + 5 >= 2 * k;
    push(
        "sat-lower",
        Quantity::Sat,
        BoundKind::LowerStrict,
        ratio(1, ki + 2).map(|c| (int(1) + c) * n_r - 1),
        sat_regime,
        "(1 + 1/(k+2))n - 1",
    );
    push(
        "sat-upper",
        Quantity::Sat,
        BoundKind::UpperStrict,
        ratio(1, ki - 4).map(|c| (int(1) + c) * n_r + binom2(ki - 4)),
        sat_regime,
        "(1 + 1/(k-4))n + C(k-4,2)",
    );
    let ssat_regime = n >= k && k >= 6;
    push(
        "ssat-lower",
        Quantity::Ssat,
        BoundKind::LowerStrict,
        ratio(1, 2 * ki - 2).map(|c| (int(1) + c) * n_r - 2),
        ssat_regime,
        "(1 + 1/(2k-2))n - 2",
    );
    push(
        "ssat-upper",
        Quantity::Ssat,
        BoundKind::UpperStrict,
        ratio(1, 2 * ki - 10).map(|c| (int(1) + c) * n_r + (ki - 1)),
        ssat_regime,
        "(1 + 1/(2k-10))n + k - 1",
    );
    push(
        "sat-refined-lower",
        Quantity::Sat,
        BoundKind::LowerStrict,
        ratio(ki * ki, ki * ki - ki + 2).map(|c| c * n_r - 1),
        k >= 5 && n >= k,
        "k^2/(k^2-k+2) n - 1",
    );
    push(
        "mindeg2-ssat-lower",
        Quantity::MinDegreeTwoSsat,
        BoundKind::Lower,
        ratio(ki, ki - 1).map(|c| c * n_r - frac(ki + 1, ki - 1)),
        k >= 5 && n >= k,
        "k/(k-1) n - (k+1)/(k-1)",
    );
    push(
        "ssat-c5-upper",
        Quantity::Ssat,
        BoundKind::Upper,
        Some(int(ceil_div(11 * (ni - 1), 8))),
        k == 5 && n >= 5,
        "ceil(11(n-1)/8)",
    );
    push(
        "ssat-wheel-paths-upper",
        Quantity::Ssat,
        BoundKind::Upper,
        (ki > 3 && ni >= 7).then(|| int(ni + Integer::div_floor(&(ni - 7), &(ki - 3)) + ki - 3)),
        k >= 4 && n >= k + 4,
        "n + floor((n-7)/(k-3)) + k - 3",
    );
    push(
        "ssat-c6-upper",
        Quantity::Ssat,
        BoundKind::Upper,
        Some(int(ceil_div(4 * ni, 3))),
        k == 6 && n >= 10,
        "ceil(4n/3)",
    );
    push(
        "ssat-thin-paths-upper",
        Quantity::Ssat,
        BoundKind::Upper,
        (ki > 5).then(|| {
            int(ceil_div((ni - ki) * (2 * ki - 9), 2 * ki - 10) + 2 * ki - 2)
        }),
        k >= 6 && n >= k,
        "ceil((1 + 1/(2k-10))(n-k)) + 2k - 2",
    );
    push(
        "sat-c3",
        Quantity::Sat,
        BoundKind::Exact,
        Some(int(ni - 1)),
        k == 3 && n >= 3,
        "n - 1",
    );
    push(
        "sat-c4",
        Quantity::Sat,
        BoundKind::Exact,
        Some(int(Integer::div_floor(&(3 * ni - 5), &2))),
        k == 4 && n >= 5,
        "floor((3n-5)/2)",
    );
    push(
        "sat-c5",
        Quantity::Sat,
        BoundKind::Exact,
        Some(int(ceil_div(10 * (ni - 1), 7))),
        k == 5 && n >= 21,
        "ceil(10(n-1)/7)",
    );
    push(
        "sat-c6-upper",
        Quantity::Sat,
        BoundKind::Upper,
        Some(frac(3 * ni, 2)),
        k == 6 && n >= 11,
        "3n/2",
    );
    push(
        "sat-prior-lower",
        Quantity::Sat,
        BoundKind::Lower,
        Some((int(1) + frac(1, 2 * ki + 8)) * n_r),
        k >= 5 && n >= k,
        "(1 + 1/(2k+8))n",
    );
    let eps = prior_epsilon(k);
    push(
        "sat-prior-upper",
        Quantity::Sat,
        BoundKind::Upper,
        eps.map(|e| (int(1) + frac(2, ki - e)) * n_r),
        eps.is_some(),
        "(1 + 2/(k - eps(k)))n",
    );
    for e in entries.iter_mut() {
        match e.name {
            "sat-prior-lower" => e.reference_only = true,
            "sat-prior-upper" => {
                e.reference_only = true;
                e.additive_unspecified = true;
            }
            _ => {}
        }
    }
    BoundTable { n, k, entries }
}

/// 2 for even k >= 10, 3 for odd k >= 17, undefined otherwise.
pub fn prior_epsilon(k: usize) -> Option<i64> {
    match k {
        k if k >= 10 && k % 2 == 0 => Some(2),
        k if k >= 17 => Some(3),
        _ => None,
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// Exact `sat(n, C_k)` where a closed formula is known.
pub fn known_exact(n: usize, k: usize) -> Option<i64> {
    let table = eval_bounds(n, k);
    table
        .entries
        .iter()
        .find(|e| e.applicable && e.kind == BoundKind::Exact && e.quantity == Quantity::Sat)
        .map(|e| e.value.to_integer())
}

/// Where an observed value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// Edge count of a `C_k`-saturated graph: an upper witness for `sat`.
    SatConstruction,
    /// Edge count of a `C_k`-semisaturated graph: an upper witness for `ssat`.
    SsatConstruction,
    /// Exhaustively computed `sat(n, C_k)`.
    SatExact,
    /// Exhaustively computed `ssat(n, C_k)`.
    SsatExact,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::SatConstruction => "sat-construction",
            Source::SsatConstruction => "ssat-construction",
            Source::SatExact => "sat-exact",
            Source::SsatExact => "ssat-exact",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Observation {
    pub source: Source,
    pub value: i64,
}

impl Observation {
    pub fn new(source: Source, value: i64) -> Self {
        Observation { source, value }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub bound: &'static str,
    pub observation: Observation,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConsistencyReport {
    pub comparisons: usize,
    pub findings: Vec<Finding>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.findings.is_empty()
    }
}

/// How an entry relates to an observation, if at all.
///
/// Using `ssat <= sat`: lower bounds on `ssat` also bind `sat` values, upper
/// bounds on `sat` also bind exact `ssat` values. A construction only
/// witnesses an upper bound on its quantity, so it is compared against lower
/// bounds and exact values (from above) but never against upper bounds.
enum Relation {
    None,
    /// The observed value must satisfy the entry directly.
    Direct,
    /// The observed value is an upper witness: it must be >= the quantity.
    FromAbove,
    /// The observed value is below the quantity: must be <= an exact value.
    FromBelow,
}

fn relation(entry: &BoundEntry, source: Source) -> Relation {
    use BoundKind::*;
    use Quantity::*;
    use Source::*;
    match (entry.quantity, entry.kind, source) {
        (MinDegreeTwoSsat, _, _) => Relation::None,
        (Sat, LowerStrict | Lower, SatExact | SatConstruction) => Relation::Direct,
        (Ssat, LowerStrict | Lower, _) => Relation::Direct,
        (Sat, Upper | UpperStrict, SatExact | SsatExact) => Relation::Direct,
        (Ssat, Upper | UpperStrict, SsatExact) => Relation::Direct,
        (Sat, Exact, SatExact) => Relation::Direct,
        (Sat, Exact, SatConstruction) => Relation::FromAbove,
        (Sat, Exact, SsatExact) => Relation::FromBelow,
        (Ssat, Exact, SsatExact) => Relation::Direct,
        (Ssat, Exact, SsatConstruction) => Relation::FromAbove,
        _ => Relation::None,
    }
}

/// Compares observations at `(n, k)` with every assertable bound. Strict
/// bounds stay strict.
pub fn check_consistency(n: usize, k: usize, observations: &[Observation]) -> ConsistencyReport {
    let table = eval_bounds(n, k);
    let mut report = ConsistencyReport::default();
    for obs in observations {
        for entry in table.entries.iter().filter(|e| e.is_assertable()) {
            let x = Rational::from_integer(obs.value);
            let ok = match relation(entry, obs.source) {
                Relation::None => continue,
                Relation::Direct => entry.admits(obs.value),
                Relation::FromAbove => x >= entry.value,
                Relation::FromBelow => x <= entry.value,
            };
            report.comparisons += 1;
            if !ok {
                report.findings.push(Finding {
                    bound: entry.name,
                    observation: *obs,
                    message: format!(
                        "{} value {} violates {} {} bound {} ({})",
                        obs.source, obs.value, entry.name, entry.kind, entry.value, entry.formula
                    ),
                });
            }
        }
    }
    report
}
