//! Named ring presentations and their expected Poincaré series.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::idealcalc::{GeneratorFamily, PresentationSpec};
use crate::polyring::{GradedVariable, Polynomial, RingSpec, Side};

pub const DEFAULT_MAX_DEGREE: u32 = 20;
pub const DEFAULT_MAX_DEGREE_TWO_SIDED: u32 = 16;
pub const MAX_DEGREE_CAP: u32 = 40;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error(
        "unknown catalog entry `{0}` (known: loopU(n), BGU(n,k), Spinc3(k), Spinc4(k), SO3, SO4)"
    )]
    UnknownEntry(String),
    #[error("entry `{0}` needs rank n >= {1}")]
    RankTooSmall(String, u32),
}

/// `prod (1 - t^e)^m / prod (1 - t^e')^m'`, exponents even and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PoincareProduct {
    pub numerator_factors: Vec<(u32, u32)>,
    pub denominator_factors: Vec<(u32, u32)>,
}

impl PoincareProduct {
    pub fn new(numerator_factors: Vec<(u32, u32)>, denominator_factors: Vec<(u32, u32)>) -> Self {
        for &(e, _) in numerator_factors.iter().chain(&denominator_factors) {
            assert!(
                e > 0 && e % 2 == 0,
                "factor exponents must be even and positive, got {e}"
            );
        }
        PoincareProduct {
            numerator_factors,
            denominator_factors,
        }
    }

    /// `prod_{i=1}^{n} 1/(1 - t^(2i))`
    pub fn chern_block(n: u32) -> Self {
        Self::new(Vec::new(), (1..=n).map(|i| (2 * i, 1)).collect())
    }

    pub fn times(&self, other: &PoincareProduct) -> PoincareProduct {
        let mut num = self.numerator_factors.clone();
        num.extend(&other.numerator_factors);
        let mut den = self.denominator_factors.clone();
        den.extend(&other.denominator_factors);
        PoincareProduct::new(num, den)
    }

    pub fn times_one_minus(&self, e: u32) -> PoincareProduct {
        self.times(&PoincareProduct::new(vec![(e, 1)], Vec::new()))
    }

    /// Same series with equal factors merged and common factors cancelled.
    pub fn reduced(&self) -> PoincareProduct {
        let mut net: BTreeMap<u32, i64> = BTreeMap::new();
        for &(e, m) in &self.denominator_factors {
            *net.entry(e).or_default() += i64::from(m);
        }
        for &(e, m) in &self.numerator_factors {
            *net.entry(e).or_default() -= i64::from(m);
        }
        let pick = |sign: i64| {
            net.iter()
                .filter(|(_, &m)| m * sign > 0)
                .map(|(&e, &m)| (e, (m * sign) as u32))
                .collect()
        };
        PoincareProduct::new(pick(-1), pick(1))
    }

    /// Coefficients of `t^0 .. t^max_degree`, by exact power-series arithmetic.
    pub fn series_coefficients(&self, max_degree: u32) -> Vec<BigInt> {
        let len = max_degree as usize + 1;
        let mut a = vec![BigInt::zero(); len];
        a[0] = BigInt::one();
        for &(e, m) in &self.numerator_factors {
            let e = e as usize;
            for _ in 0..m {
                for i in (e..len).rev() {
                    let prev = a[i - e].clone();
                    a[i] -= prev;
                }
            }
        }
        for &(e, m) in &self.denominator_factors {
            let e = e as usize;
            for _ in 0..m {
                for i in e..len {
                    let prev = a[i - e].clone();
                    a[i] += prev;
                }
            }
        }
        a
    }

    /// Coefficients at the even degrees `0, 2, .., max_degree`.
    pub fn even_coefficients(&self, max_degree: u32) -> Vec<BigInt> {
        self.series_coefficients(max_degree)
            .into_iter()
            .step_by(2)
            .collect()
    }
}

pub fn series_coefficients(s: &PoincareProduct, max_degree: u32) -> Vec<BigInt> {
    s.series_coefficients(max_degree)
}

impl fmt::Display for PoincareProduct {
    /// Renders the reduced form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let this = self.reduced();
        let render = |fs: &[(u32, u32)]| -> String {
            fs.iter()
                .map(|&(e, m)| {
                    if m == 1 {
                        format!("(1-t^{e})")
                    } else {
                        format!("(1-t^{e})^{m}")
                    }
                })
                .collect::<String>()
        };
        let num = render(&this.numerator_factors);
        let num = if num.is_empty() { "1".to_string() } else { num };
        if this.denominator_factors.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/({})", render(&this.denominator_factors))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub presentation: PresentationSpec,
    pub expected_series: Option<PoincareProduct>,
    pub description: String,
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        &self.presentation.name
    }

    pub fn max_degree(&self) -> u32 {
        self.presentation.max_degree()
    }

    pub fn with_max_degree(&self, max_degree: u32) -> Self {
        CatalogEntry {
            presentation: self.presentation.with_max_degree(max_degree),
            ..self.clone()
        }
    }

    pub fn is_two_sided(&self) -> bool {
        self.presentation.ring.is_two_sided()
    }
}

fn var(v: GradedVariable) -> Polynomial {
    Polynomial::var(v)
}

fn u2_series() -> PoincareProduct {
    PoincareProduct::chern_block(2).times(&PoincareProduct::chern_block(1))
}

/// `Z[x_1, x_2, ..] / (s_n, s_(n+1), ..)_R`
pub fn entry_loop_u(n: u32, max_degree: u32) -> Result<CatalogEntry, CatalogError> {
    if n < 2 {
        return Err(CatalogError::RankTooSmall(format!("loopU({n})"), 2));
    }
    let presentation = PresentationSpec::new(
        format!("loopU({n})"),
        RingSpec::loop_space(max_degree),
        vec![GeneratorFamily::PowerSums {
            from: n,
            side: Side::None,
        }],
        Vec::new(),
        None,
    )
    .expect("catalog presentation is well formed");
    Ok(CatalogEntry {
        presentation,
        expected_series: Some(PoincareProduct::chern_block(n - 1)),
        description: "loop space of U(n): power sums s_n, s_(n+1), .. rationally closed".into(),
    })
}

/// `Z[c_1..c_n, x_1, ..] / (h_n, h_(n+1), ..)_R`
pub fn entry_bgauge_u(n: u32, k: i64, max_degree: u32) -> Result<CatalogEntry, CatalogError> {
    if n < 1 {
        return Err(CatalogError::RankTooSmall(format!("BGU({n},{k})"), 1));
    }
    let presentation = PresentationSpec::new(
        format!("BGU({n},{k})"),
        RingSpec::gauge(n, max_degree),
        vec![GeneratorFamily::Relations {
            from: n,
            n,
            k,
            side: Side::None,
        }],
        Vec::new(),
        Some(k),
    )
    .expect("catalog presentation is well formed");
    Ok(CatalogEntry {
        presentation,
        expected_series: Some(
            PoincareProduct::chern_block(n).times(&PoincareProduct::chern_block(n - 1)),
        ),
        description:
            "classifying space of the U(n) gauge group: h_n, h_(n+1), .. rationally closed".into(),
    })
}

/// Same presentation as `BGU(2,k)`.
pub fn entry_spinc3(k: i64, max_degree: u32) -> CatalogEntry {
    let mut e = entry_bgauge_u(2, k, max_degree).expect("rank 2 is valid");
    e.presentation.name = format!("Spinc3({k})");
    e.description = "Spin^c(3) gauge group: identical to the U(2) presentation".into();
    e
}

/// Two-sided `BGU(2,k)` with the families closed jointly, plus `L.c1 - R.c1`.
pub fn entry_spinc4(k: i64, max_degree: u32) -> CatalogEntry {
    let c1 = GradedVariable::c(1);
    let presentation = PresentationSpec::new(
        format!("Spinc4({k})"),
        RingSpec::gauge(2, max_degree).tensor_square(),
        vec![
            GeneratorFamily::Relations {
                from: 2,
                n: 2,
                k,
                side: Side::Left,
            },
            GeneratorFamily::Relations {
                from: 2,
                n: 2,
                k,
                side: Side::Right,
            },
        ],
        vec![&var(c1.with_side(Side::Left)) - &var(c1.with_side(Side::Right))],
        Some(k),
    )
    .expect("catalog presentation is well formed");
    CatalogEntry {
        presentation,
        expected_series: Some(u2_series().times(&u2_series()).times_one_minus(2)),
        description:
            "Spin^c(4) gauge group: U(2) x U(2) relations closed, plus c1 (x) 1 - 1 (x) c1".into(),
    }
}

/// `BGU(2,1)` plus the plain generator `x_1`.
pub fn entry_so3(max_degree: u32) -> CatalogEntry {
    let mut e = entry_bgauge_u(2, 1, max_degree).expect("rank 2 is valid");
    e.presentation.name = "SO3".into();
    e.presentation
        .plain_generators
        .push(var(GradedVariable::x(1)));
    e.expected_series = e.expected_series.map(|s| s.times_one_minus(2));
    e.description = "SO(3) gauge group, k = 1: (h_2, h_3, ..)_R + (x_1)".into();
    e
}

/// `Spinc4(1)` plus the plain generator `L.x1`.
pub fn entry_so4(max_degree: u32) -> CatalogEntry {
    let mut e = entry_spinc4(1, max_degree);
    e.presentation.name = "SO4".into();
    e.presentation
        .plain_generators
        .push(var(GradedVariable::x(1).with_side(Side::Left)));
    e.expected_series = e.expected_series.map(|s| s.times_one_minus(2));
    e.description =
        "SO(4) gauge group, k = 1: (h_i (x) 1, 1 (x) h_i)_R + (c1 (x) 1 - 1 (x) c1, x1 (x) 1)"
            .into();
    e
}

fn parse_args(s: &str, prefix: &str) -> Option<Vec<i64>> {
    let inner = s
        .strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?;
    inner
        .split(',')
        .map(|a| a.trim().parse::<i64>().ok())
        .collect()
}

fn is_two_sided_name(name: &str) -> bool {
    name.starts_with("Spinc4") || name == "SO4"
}

pub fn default_max_degree(name: &str) -> u32 {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    if is_two_sided_name(&compact) {
        DEFAULT_MAX_DEGREE_TWO_SIDED
    } else {
        DEFAULT_MAX_DEGREE
    }
}

/// Resolves a name such as `BGU(2,1)` or `SO3`. `None` picks the default degree bound.
pub fn lookup(name: &str, max_degree: Option<u32>) -> Result<CatalogEntry, CatalogError> {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let d = max_degree.unwrap_or_else(|| default_max_degree(&compact));
    let unknown = || CatalogError::UnknownEntry(name.to_string());
    let rank = |v: i64| u32::try_from(v).map_err(|_| unknown());
    match compact.as_str() {
        "SO3" => return Ok(entry_so3(d)),
        "SO4" => return Ok(entry_so4(d)),
        _ => {}
    }
    if let Some(a) = parse_args(&compact, "loopU") {
        return match a.as_slice() {
            [n] => entry_loop_u(rank(*n)?, d),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = parse_args(&compact, "BGU") {
        return match a.as_slice() {
            [n, k] => entry_bgauge_u(rank(*n)?, *k, d),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = parse_args(&compact, "Spinc3") {
        return match a.as_slice() {
            [k] => Ok(entry_spinc3(*k, d)),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = parse_args(&compact, "Spinc4") {
        return match a.as_slice() {
            [k] => Ok(entry_spinc4(*k, d)),
            _ => Err(unknown()),
        };
    }
    Err(unknown())
}

/// Name templates accepted by [`lookup`].
pub fn entry_templates() -> &'static [&'static str] {
    &[
        "loopU(n)",
        "BGU(n,k)",
        "Spinc3(k)",
        "Spinc4(k)",
        "SO3",
        "SO4",
    ]
}
