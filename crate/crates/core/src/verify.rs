//! Verification claims: each check recomputes one algebraic statement
//! exactly and reports pass or fail with the data behind it.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::catalog::{self, CatalogEntry, CatalogError, DEFAULT_MAX_DEGREE_TWO_SIDED};
use crate::exactlin::{hermite_basis, SparseRow};
use crate::idealcalc::{
    self, coordinates, degree_basis, degree_reports, ideal_lattice, membership, Closure,
    DegreeReport, IdealError, Membership,
};
use crate::polyring::{GradedVariable, Homomorphism, Monomial, PolyError, Polynomial, RingSpec};
use crate::symfam::{
    self, check_p_divisibility, girard_s, h_poly, newton_s, power_sum, powersum_oracle, SymError,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("entry {0} has no expected Poincaré series")]
    MissingSeries(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// A claim designed to fail did fail, as it should.
    ExpectedFail,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::ExpectedFail => "expected_fail",
        }
    }
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim_id: String,
    pub status: ClaimStatus,
    /// One line per sub-assertion or per degree.
    pub details: Vec<String>,
    pub witness: Option<String>,
    pub runtime: Duration,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.status == ClaimStatus::Pass
    }
}

/// Accumulates sub-assertions for one claim.
struct Checks {
    ok: bool,
    details: Vec<String>,
    witness: Option<String>,
    started: Instant,
}

impl Checks {
    fn new() -> Self {
        Checks {
            ok: true,
            details: Vec::new(),
            witness: None,
            started: Instant::now(),
        }
    }

    fn check(&mut self, cond: bool, what: impl Into<String>) {
        let what = what.into();
        self.details
            .push(format!("[{}] {what}", if cond { "ok" } else { "FAILED" }));
        if !cond && self.ok {
            self.witness.get_or_insert(what);
        }
        self.ok &= cond;
    }

    fn note(&mut self, what: impl Into<String>) {
        self.details.push(what.into());
    }

    fn finish(self, id: impl Into<String>) -> ClaimResult {
        self.finish_with(id, false)
    }

    /// With `expect_failure`, a failing check is the desired outcome.
    fn finish_with(mut self, id: impl Into<String>, expect_failure: bool) -> ClaimResult {
        if expect_failure && self.ok {
            self.details
                .push("[FAILED] expected a failing check, found none".into());
            self.witness = Some("expected failure did not occur".into());
        }
        let status = match (self.ok, expect_failure) {
            (true, false) => ClaimStatus::Pass,
            (false, true) => ClaimStatus::ExpectedFail,
            _ => ClaimStatus::Fail,
        };
        ClaimResult {
            claim_id: id.into(),
            status,
            details: self.details,
            witness: self.witness,
            runtime: self.started.elapsed(),
        }
    }
}

/// The degree-8 element of the `n = 2, k = 1` presentation that is
/// rationally but not integrally in the ideal, and the combination of
/// `h_4, h_3, h_2` that equals twice it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleData {
    pub y: Polynomial,
    /// Coefficients of `h_4, h_3, h_2`.
    pub combo: [Polynomial; 3],
}

impl Default for CounterexampleData {
    fn default() -> Self {
        let c = |i| Polynomial::var(GradedVariable::c(i));
        let x = |i| Polynomial::var(GradedVariable::x(i));
        let terms: [(i64, Polynomial); 7] = [
            (1, &c(1).pow(2) * &x(2)),
            (1, &(&c(1) * &x(1)) * &x(2)),
            (-1, &x(1).pow(2) * &x(2)),
            (-1, &c(2) * &x(2)),
            (1, x(2).pow(2)),
            (2, &x(1) * &x(3)),
            (-2, x(4)),
        ];
        let y = terms
            .iter()
            .fold(Polynomial::zero(), |acc, (k, t)| &acc + &(*k * t));
        let combo = [
            Polynomial::one(),
            -&c(1),
            -&(&(&c(1) * &x(1)) + &x(1).pow(2)),
        ];
        CounterexampleData { y, combo }
    }
}

impl CounterexampleData {
    /// `h_4 - c_1 h_3 - (c_1 x_1 + x_1^2) h_2 - 2 y`, which should vanish.
    pub fn residual(&self) -> Polynomial {
        let hs = [4, 3, 2].map(|i| h_poly(i, 2, 1).expect("index >= 1"));
        let combination = self
            .combo
            .iter()
            .zip(&hs)
            .fold(Polynomial::zero(), |acc, (a, h)| &acc + &(a * h));
        &combination - &(2 * &self.y)
    }
}

/// One verifiable statement, addressable by a string id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    Counterexample,
    X4Divisibility,
    NewtonGirard,
    PowerSum,
    PDivisibility,
    Induction,
    Pi1Ranks,
    /// Empty torsion in every degree. With `closure == false` the claim is
    /// expected to fail.
    TorsionFree {
        entry: String,
        closure: bool,
    },
    Poincare {
        entry: String,
    },
    Spinc3Equivalence {
        k: i64,
    },
}

impl Claim {
    pub fn expects_failure(&self) -> bool {
        matches!(self, Claim::TorsionFree { closure: false, .. })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Counterexample => write!(f, "counterexample"),
            Claim::X4Divisibility => write!(f, "x4-divisibility"),
            Claim::NewtonGirard => write!(f, "newton-girard"),
            Claim::PowerSum => write!(f, "powersum"),
            Claim::PDivisibility => write!(f, "p-divisibility"),
            Claim::Induction => write!(f, "induction"),
            Claim::Pi1Ranks => write!(f, "pi1-ranks"),
            Claim::TorsionFree {
                entry,
                closure: true,
            } => write!(f, "torsion:{entry}"),
            Claim::TorsionFree {
                entry,
                closure: false,
            } => write!(f, "torsion:{entry}:no-closure"),
            Claim::Poincare { entry } => write!(f, "poincare:{entry}"),
            Claim::Spinc3Equivalence { k } => write!(f, "spinc3-equivalence:{k}"),
        }
    }
}

impl FromStr for Claim {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || VerifyError::UnknownClaim(s.to_string());
        let canonical = |name: &str| -> Result<String, VerifyError> {
            Ok(catalog::lookup(name, Some(0))
                .map_err(|_| unknown())?
                .name()
                .to_string())
        };
        Ok(match s.trim() {
            "counterexample" => Claim::Counterexample,
            "x4-divisibility" => Claim::X4Divisibility,
            "newton-girard" => Claim::NewtonGirard,
            "powersum" => Claim::PowerSum,
            "p-divisibility" => Claim::PDivisibility,
            "induction" => Claim::Induction,
            "pi1-ranks" => Claim::Pi1Ranks,
            other => {
                if let Some(rest) = other.strip_prefix("torsion:") {
                    match rest.strip_suffix(":no-closure") {
                        Some(entry) => Claim::TorsionFree {
                            entry: canonical(entry)?,
                            closure: false,
                        },
                        None => Claim::TorsionFree {
                            entry: canonical(rest)?,
                            closure: true,
                        },
                    }
                } else if let Some(rest) = other.strip_prefix("poincare:") {
                    Claim::Poincare {
                        entry: canonical(rest)?,
                    }
                } else if let Some(rest) = other.strip_prefix("spinc3-equivalence:") {
                    Claim::Spinc3Equivalence {
                        k: rest.trim().parse().map_err(|_| unknown())?,
                    }
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

/// Entries whose torsion and Poincaré series the default campaign checks.
pub const CAMPAIGN_ENTRIES: [&str; 9] = [
    "BGU(2,0)",
    "BGU(2,1)",
    "BGU(3,1)",
    "loopU(2)",
    "loopU(3)",
    "SO3",
    "Spinc4(0)",
    "Spinc4(1)",
    "SO4",
];

/// Claim ids of the full campaign, in report order.
pub fn default_campaign() -> Vec<String> {
    let mut ids: Vec<String> = [
        "counterexample",
        "x4-divisibility",
        "newton-girard",
        "powersum",
        "p-divisibility",
        "induction",
        "pi1-ranks",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    ids.extend(CAMPAIGN_ENTRIES.iter().map(|e| format!("torsion:{e}")));
    ids.extend(CAMPAIGN_ENTRIES.iter().map(|e| format!("poincare:{e}")));
    ids.push("spinc3-equivalence:0".into());
    ids.push("spinc3-equivalence:1".into());
    ids.push("torsion:BGU(2,1):no-closure".into());
    ids
}

/// Degree bound used for an entry in a campaign run at bound `max_degree`:
/// two-sided rings are capped at their default bound.
pub fn campaign_degree(entry: &CatalogEntry, max_degree: u32) -> u32 {
    if entry.is_two_sided() {
        max_degree.min(DEFAULT_MAX_DEGREE_TWO_SIDED)
    } else {
        max_degree
    }
}

type ScanKey = (String, u32, Closure);

/// Runs claims, sharing degree scans between them.
#[derive(Default)]
pub struct Verifier {
    scans: Mutex<HashMap<ScanKey, Arc<Vec<DegreeReport>>>>,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Degree reports for `entry` up to `d`, computed once per verifier.
    pub fn scan(
        &self,
        entry: &CatalogEntry,
        d: u32,
        closure: Closure,
    ) -> Result<Arc<Vec<DegreeReport>>, VerifyError> {
        let key = (entry.name().to_string(), d, closure);
        if let Some(r) = self.scans.lock().expect("scan cache poisoned").get(&key) {
            return Ok(r.clone());
        }
        let reports = Arc::new(degree_reports(
            &entry.with_max_degree(d).presentation,
            d,
            closure,
        )?);
        self.scans
            .lock()
            .expect("scan cache poisoned")
            .insert(key, reports.clone());
        Ok(reports)
    }

    pub fn run(&self, claim: &Claim, max_degree: u32) -> Result<ClaimResult, VerifyError> {
        match claim {
            Claim::Counterexample => verify_counterexample(),
            Claim::X4Divisibility => verify_x4_divisibility(),
            Claim::NewtonGirard => Ok(verify_newton_girard(12)),
            Claim::PowerSum => verify_powersum(6),
            Claim::PDivisibility => verify_p_divisibility(13),
            Claim::Induction => verify_induction_grid(-2..=2, -2..=2, 10),
            Claim::Pi1Ranks => verify_pi1_ranks(),
            Claim::TorsionFree { entry, closure } => {
                let e = catalog::lookup(entry, None)?;
                let d = campaign_degree(&e, max_degree);
                self.torsion_free(&e, d, *closure)
            }
            Claim::Poincare { entry } => {
                let e = catalog::lookup(entry, None)?;
                let d = campaign_degree(&e, max_degree);
                self.poincare(&e, d)
            }
            Claim::Spinc3Equivalence { k } => self.spinc3_equivalence(*k, max_degree),
        }
    }

    pub fn torsion_free(
        &self,
        entry: &CatalogEntry,
        d: u32,
        closure: bool,
    ) -> Result<ClaimResult, VerifyError> {
        let claim = Claim::TorsionFree {
            entry: entry.name().to_string(),
            closure,
        };
        let mode = if closure {
            Closure::Families
        } else {
            Closure::Off
        };
        let mut checks = Checks::new();
        for r in self.scan(entry, d, mode)?.iter() {
            checks.check(
                r.is_free(),
                format!(
                    "degree {}: torsion {}",
                    r.degree,
                    render_ints(&r.torsion_invariants)
                ),
            );
        }
        Ok(checks.finish_with(claim.to_string(), claim.expects_failure()))
    }

    pub fn poincare(&self, entry: &CatalogEntry, d: u32) -> Result<ClaimResult, VerifyError> {
        let series = entry
            .expected_series
            .as_ref()
            .ok_or_else(|| VerifyError::MissingSeries(entry.name().to_string()))?;
        let expected = series.even_coefficients(d);
        let mut checks = Checks::new();
        checks.note(format!("expected series {series}"));
        for (r, e) in self
            .scan(entry, d, Closure::Families)?
            .iter()
            .zip(&expected)
        {
            checks.check(
                BigInt::from(r.quotient_rank) == *e,
                format!(
                    "degree {}: quotient rank {} vs series coefficient {e}",
                    r.degree, r.quotient_rank
                ),
            );
        }
        Ok(checks.finish(
            Claim::Poincare {
                entry: entry.name().to_string(),
            }
            .to_string(),
        ))
    }

    pub fn spinc3_equivalence(&self, k: i64, d: u32) -> Result<ClaimResult, VerifyError> {
        let a = self.scan(&catalog::entry_spinc3(k, d), d, Closure::Families)?;
        let b = self.scan(&catalog::entry_bgauge_u(2, k, d)?, d, Closure::Families)?;
        let mut checks = Checks::new();
        checks.check(a.len() == b.len(), format!("{} degrees each", a.len()));
        for (x, y) in a.iter().zip(b.iter()) {
            checks.check(x == y, format!("degree {}: identical reports", x.degree));
        }
        Ok(checks.finish(Claim::Spinc3Equivalence { k }.to_string()))
    }
}

fn render_ints(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub fn verify_counterexample() -> Result<ClaimResult, VerifyError> {
    let data = CounterexampleData::default();
    let entry = catalog::entry_bgauge_u(2, 1, 8)?;
    let p = &entry.presentation;
    let mut checks = Checks::new();
    let residual = data.residual();
    checks.check(
        residual.is_zero(),
        format!("h4 - c1*h3 - (c1*x1 + x1^2)*h2 - 2y = {residual}"),
    );
    let m = membership(&data.y, p, Closure::Off)?;
    checks.check(
        m == Membership::InClosure(BigInt::from(2)),
        format!("y: {m}"),
    );
    let m2 = membership(&(2 * &data.y), p, Closure::Off)?;
    checks.check(m2 == Membership::InIdeal, format!("2y: {m2}"));
    let closed = membership(&data.y, p, Closure::Families)?;
    checks.check(
        closed == Membership::InIdeal,
        format!("y in the closed ideal: {closed}"),
    );
    let report = idealcalc::quotient_report(p, 8, Closure::Off)?;
    checks.check(
        report.torsion_invariants.contains(&BigInt::from(2)),
        format!(
            "degree 8 unclosed torsion {}",
            render_ints(&report.torsion_invariants)
        ),
    );
    let mut result = checks.finish(Claim::Counterexample.to_string());
    if result.passed() {
        result.witness = Some(format!("y = {}", data.y));
    }
    Ok(result)
}

pub fn verify_x4_divisibility() -> Result<ClaimResult, VerifyError> {
    let entry = catalog::entry_bgauge_u(2, 1, 8)?;
    let p = &entry.presentation;
    let x4 = Monomial::var(GradedVariable::x(4));
    let basis = degree_basis(&p.ring, 8)?;
    let col = basis
        .iter()
        .position(|m| *m == x4)
        .expect("x4 has degree 8");
    let mut checks = Checks::new();

    let h4 = h_poly(4, 2, 1)?;
    checks.check(
        h4.coefficient_of(&x4) == BigInt::from(-4),
        format!("x4-coefficient of h4: {}", h4.coefficient_of(&x4)),
    );
    let mut lower_ok = true;
    for i in [2, 3] {
        let h = h_poly(i, 2, 1)?;
        for m in p.ring.monomial_basis(8 - 2 * i)? {
            lower_ok &= h.mul_monomial(&m).coefficient_of(&x4).is_zero();
        }
    }
    checks.check(
        lower_ok,
        "x4-coefficient of every m*h2 and m*h3 in degree 8 is 0",
    );

    let lattice = ideal_lattice(p, 8, Closure::Off)?;
    let projected: Vec<SparseRow> = lattice
        .basis_rows()
        .iter()
        .filter_map(|r| {
            r.get(col)
                .map(|v| SparseRow::from_entries(vec![(0, v.clone())]))
        })
        .collect();
    let content = hermite_basis(1, projected)
        .first()
        .and_then(|r| r.get(0).cloned())
        .unwrap_or_default();
    checks.check(
        content == BigInt::from(4),
        format!("content of the x4 projection: {content}"),
    );
    // Same gcd straight from the generating rows.
    let y = CounterexampleData::default().y;
    let y_coord = coordinates(&p.ring, 8, &y)?
        .get(col)
        .cloned()
        .unwrap_or_default();
    checks.check(
        !(y_coord.mod_floor(&content)).is_zero(),
        format!("x4-coordinate of y is {y_coord}, not a multiple of {content}"),
    );
    Ok(checks.finish(Claim::X4Divisibility.to_string()))
}

pub fn verify_torsion_free(
    entry_name: &str,
    max_degree: u32,
    closure: bool,
) -> Result<ClaimResult, VerifyError> {
    let e = catalog::lookup(entry_name, Some(max_degree))?;
    Verifier::new().torsion_free(&e, max_degree, closure)
}

pub fn verify_poincare(entry_name: &str, max_degree: u32) -> Result<ClaimResult, VerifyError> {
    let e = catalog::lookup(entry_name, Some(max_degree))?;
    Verifier::new().poincare(&e, max_degree)
}

pub fn verify_spinc3_equivalence(k: i64, max_degree: u32) -> Result<ClaimResult, VerifyError> {
    Verifier::new().spinc3_equivalence(k, max_degree)
}

/// Images of `s_n` under the map `c1 -> 2u, c2 -> u^2, x1 -> (k - l)u`,
/// propagated through the `h_i = 0` relations of the `n = 2` presentation.
pub fn induced_power_sum_images(
    k: i64,
    l: i64,
    n_max: u32,
) -> Result<Vec<Polynomial>, VerifyError> {
    let u = Polynomial::var(GradedVariable::c(1));
    let d = 2 * n_max.max(2);
    let alpha = Homomorphism::new(
        RingSpec::gauge(2, d),
        RingSpec::chern(1, d),
        [
            (GradedVariable::c(1), 2 * &u),
            (GradedVariable::c(2), u.pow(2)),
            (GradedVariable::x(1), (k - l) * &u),
        ],
    )?;
    let c1 = alpha.apply(&Polynomial::var(GradedVariable::c(1)))?;
    let c2 = alpha.apply(&Polynomial::var(GradedVariable::c(2)))?;
    let mut images = vec![Polynomial::one(), alpha.apply(&newton_s(1))?];
    for n in 2..=n_max as usize {
        let next = if n == 2 {
            &(&images[1] * &c1) - &(k * &c2)
        } else {
            &(&images[n - 1] * &c1) - &(&images[n - 2] * &c2)
        };
        images.push(next);
    }
    Ok(images)
}

pub fn verify_induced_induction(k: i64, l: i64, n_max: u32) -> Result<ClaimResult, VerifyError> {
    let mut checks = Checks::new();
    induction_checks(&mut checks, k, l, n_max)?;
    Ok(checks.finish(format!("induction:k={k},l={l}")))
}

fn induction_checks(checks: &mut Checks, k: i64, l: i64, n_max: u32) -> Result<(), VerifyError> {
    let u = Polynomial::var(GradedVariable::c(1));
    let images = induced_power_sum_images(k, l, n_max)?;
    let mut bad = Vec::new();
    for (n, img) in images.iter().enumerate().skip(1) {
        let expected = (k - n as i64 * l) * &u.pow(n as u32);
        if *img != expected {
            bad.push(format!("n={n}: {img} != {expected}"));
        }
    }
    checks.check(
        bad.is_empty(),
        format!(
            "k={k}, l={l}: image of s_n = (k - n l) u^n for n <= {n_max} {}",
            bad.join("; ")
        ),
    );
    Ok(())
}

/// The recursion used for the images is exactly `h_n = 0` at rank 2.
fn relation_recursion_checks(checks: &mut Checks, n_max: u32) -> Result<(), VerifyError> {
    let c1 = Polynomial::var(GradedVariable::c(1));
    let c2 = Polynomial::var(GradedVariable::c(2));
    for k in -2..=2i64 {
        let h2 = h_poly(2, 2, k)?;
        let rel2 = &(&(k * &c2) - &(&newton_s(1) * &c1)) + &newton_s(2);
        checks.check(h2 == rel2, format!("h2 = k c2 - s1 c1 + s2 at k={k}"));
    }
    let mut ok = true;
    for n in 3..=n_max {
        let rel = &(&(&newton_s(n - 2) * &c2) - &(&newton_s(n - 1) * &c1)) + &newton_s(n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        ok &= h_poly(n, 2, 1)? == sign * &rel;
    }
    checks.check(
        ok,
        format!("h_n = (-1)^n (s_(n-2) c2 - s_(n-1) c1 + s_n) for 3 <= n <= {n_max}"),
    );
    Ok(())
}

pub fn verify_induction_grid(
    ks: std::ops::RangeInclusive<i64>,
    ls: std::ops::RangeInclusive<i64>,
    n_max: u32,
) -> Result<ClaimResult, VerifyError> {
    let mut checks = Checks::new();
    relation_recursion_checks(&mut checks, n_max)?;
    for k in ks {
        for l in ls.clone() {
            induction_checks(&mut checks, k, l, n_max)?;
        }
    }
    Ok(checks.finish(Claim::Induction.to_string()))
}

pub fn verify_pi1_ranks() -> Result<ClaimResult, VerifyError> {
    let mut checks = Checks::new();
    for (entry, rank) in [(catalog::entry_so3(2), 1), (catalog::entry_so4(2), 2)] {
        let r = idealcalc::quotient_report(&entry.presentation, 2, Closure::Families)?;
        checks.check(
            r.quotient_rank == rank && r.is_free(),
            format!(
                "{} degree 2: rank {}, torsion {}",
                entry.name(),
                r.quotient_rank,
                render_ints(&r.torsion_invariants)
            ),
        );
    }
    let ctx = idealcalc::quotient_report(
        &catalog::entry_bgauge_u(2, 1, 2)?.presentation,
        2,
        Closure::Families,
    )?;
    checks.note(format!("BGU(2,1) degree 2: rank {}", ctx.quotient_rank));
    Ok(checks.finish(Claim::Pi1Ranks.to_string()))
}

pub fn verify_newton_girard(n_max: u32) -> ClaimResult {
    let mut checks = Checks::new();
    for n in 1..=n_max {
        let g = girard_s(n).expect("n >= 1");
        checks.check(
            g == newton_s(n),
            format!("s_{n}: recursion = closed form ({} terms)", g.len()),
        );
    }
    checks.finish(Claim::NewtonGirard.to_string())
}

pub fn verify_powersum(count_max: u32) -> Result<ClaimResult, VerifyError> {
    let mut checks = Checks::new();
    for count in 1..=count_max {
        for n in 1..=count {
            let img = powersum_oracle(n, count)?;
            checks.check(
                img == power_sum(n, count),
                format!("s_{n}(e(t_1..t_{count})) = t_1^{n} + .. + t_{count}^{n}"),
            );
        }
    }
    Ok(checks.finish(Claim::PowerSum.to_string()))
}

pub fn verify_p_divisibility(p_max: u64) -> Result<ClaimResult, VerifyError> {
    let mut checks = Checks::new();
    for p in (2..=p_max).filter(|&p| symfam::is_prime(p)) {
        checks.check(
            check_p_divisibility(p)?,
            format!("s_{p} - x1^{p} = 0 (mod {p})"),
        );
    }
    Ok(checks.finish(Claim::PDivisibility.to_string()))
}

/// Runs the named claims (in parallel) and returns results in input order.
pub fn run_campaign(names: &[String], max_degree: u32) -> Result<Vec<ClaimResult>, VerifyError> {
    let claims = names
        .iter()
        .map(|n| n.parse::<Claim>())
        .collect::<Result<Vec<_>, _>>()?;
    let verifier = Verifier::new();
    claims
        .par_iter()
        .map(|c| verifier.run(c, max_degree))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for id in default_campaign() {
            let c: Claim = id.parse().unwrap();
            assert_eq!(c.to_string(), id);
        }
        assert_eq!(
            "torsion:BGU(2, 1)".parse::<Claim>().unwrap().to_string(),
            "torsion:BGU(2,1)"
        );
        assert!(matches!(
            "nonsense".parse::<Claim>(),
            Err(VerifyError::UnknownClaim(_))
        ));
        assert!(matches!(
            "torsion:SO7".parse::<Claim>(),
            Err(VerifyError::UnknownClaim(_))
        ));
    }

    #[test]
    fn counterexample_element() {
        let d = CounterexampleData::default();
        assert_eq!(d.y.homogeneous_degree(), Some(8));
        assert_eq!(
            d.y.coefficient_of(&Monomial::var(GradedVariable::x(4))),
            BigInt::from(-2)
        );
        assert!(d.residual().is_zero());
    }

    #[test]
    fn induction_examples() {
        let u = Polynomial::var(GradedVariable::c(1));
        let img = induced_power_sum_images(1, 0, 3).unwrap();
        assert_eq!(img[3], u.pow(3));
        let img = induced_power_sum_images(0, 1, 4).unwrap();
        assert_eq!(img[4], -4 * &u.pow(4));
        let img = induced_power_sum_images(7, 3, 1).unwrap();
        assert_eq!(img[1], 4 * &u);
    }

    #[test]
    fn expected_fail_status() {
        let r = verify_torsion_free("BGU(2,1)", 8, false).unwrap();
        // Designed to fail: the unclosed presentation has torsion in degree 8.
        let c = Claim::TorsionFree {
            entry: "BGU(2,1)".into(),
            closure: false,
        };
        assert!(c.expects_failure());
        assert_eq!(r.status, ClaimStatus::ExpectedFail);
        assert!(r.witness.unwrap().starts_with("degree 8"));
    }
}
