//! Closed-form values of `ex(n, F)` and `ex_p(n, F)`.
//!
//! Every evaluator returns the formula value together with whether `n` (and
//! `p`) meet the hypotheses of the theorem it comes from. A value outside the
//! window is still returned; it is what the formula says, not a claim about
//! the true extremal number.

use serde::Serialize;

use crate::constructions as cons;
use crate::count::BigCount;
use crate::error::{domain, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: BigCount,
    pub in_window: bool,
    pub window: String,
    pub source: String,
    /// Indices `i` attaining the maximum, for formulas defined as a maximum.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmax: Option<Vec<usize>>,
}

impl FormulaResult {
    fn new(value: BigCount, in_window: bool, window: impl Into<String>, source: &str) -> Self {
        FormulaResult {
            value,
            in_window,
            window: window.into(),
            source: source.to_string(),
            argmax: None,
        }
    }
}

fn pw(base: u64, p: u32) -> BigCount {
    BigCount::power(base, p)
}

fn c2(x: u64) -> BigCount {
    BigCount::from(x as u128 * x.saturating_sub(1) as u128 / 2)
}

fn big(x: u64) -> BigCount {
    BigCount::from(x)
}

fn need_p(p: u32) -> Result<()> {
    if p == 0 {
        domain("p must be >= 1")
    } else {
        Ok(())
    }
}

fn unspecified(size: usize) -> String {
    format!("unspecified n_0(F) >= {size}")
}

/// Appends the exponent requirement to a window when `p` is too small.
fn with_p(window: String, p: u32, min_p: u32) -> (String, bool) {
    if p >= min_p {
        (window, true)
    } else {
        (format!("{window}; needs p >= {min_p}"), false)
    }
}

/// `ex(n, P_ℓ) = a·C(ℓ-1, 2) + C(b, 2)` with `n = a(ℓ-1) + b`, `0 <= b < ℓ-1`.
pub fn ex_path(n: u64, ell: usize) -> Result<FormulaResult> {
    if ell < 2 {
        return domain(format!("path order must be >= 2, got {ell}"));
    }
    let m = ell as u64 - 1;
    let (a, b) = (n / m, n % m);
    let value = c2(m) * a + c2(b);
    Ok(FormulaResult::new(value, true, "all n", "Faudree-Schelp exact path Turán number"))
}

/// Erdős–Gallai bound `⌊n(ℓ-2)/2⌋` on `ex(n, P_ℓ)`.
pub fn eg_bound(n: u64, ell: usize) -> Result<BigCount> {
    if ell < 2 {
        return domain(format!("path order must be >= 2, got {ell}"));
    }
    Ok(BigCount::from(n as u128 * (ell as u128 - 2) / 2))
}

fn sorted_desc(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn check_lengths(lengths: &[usize]) -> Result<()> {
    if lengths.is_empty() {
        return domain("linear forest needs at least one path");
    }
    if lengths.iter().any(|&l| l < 2) {
        return domain("path orders must be >= 2");
    }
    if lengths.len() >= 2 && lengths.iter().all(|&l| l == 3) {
        return domain("kP_3 is not covered by the linear forest formula; use ex_kP3 / exp_kP3");
    }
    Ok(())
}

/// `ex(n, F) = C(b,2) + b(n-b) + c` for a linear forest `F` with at least two
/// components, `b = Σ⌊ℓ_i/2⌋ - 1`, `c = 1` iff every `ℓ_i` is odd.
pub fn ex_linear_forest(n: u64, lengths: &[usize]) -> Result<FormulaResult> {
    check_lengths(lengths)?;
    let ls = sorted_desc(lengths);
    if ls.len() == 1 {
        return ex_path(n, ls[0]);
    }
    let b = cons::linear_forest_b(&ls).expect("k >= 2") as u64;
    let all_odd = ls.iter().all(|l| l % 2 == 1);
    if n < b + 2 {
        return domain(format!("formula needs n >= b + 2 = {}, got {n}", b + 2));
    }
    let value = c2(b) + big(b) * big(n - b) + big(all_odd as u64);
    let k = ls.len() as u64;
    let (window, in_window, source) = if ls.iter().all(|&l| l == 2) {
        (
            format!("n > 5k/2 - 1 = {}", fmt_half(5 * k, 2)),
            2 * n > 5 * k - 2,
            "Erdős-Gallai kP_2 theorem",
        )
    } else if ls.iter().all(|&l| l == ls[0]) && ls[0] >= 4 {
        let l = ls[0] as u128;
        let bound = 2 * l + 2 * k as u128 * l * (l.div_ceil(2) + 1) * binom(l, l / 2);
        (
            format!("n >= 2ℓ + 2kℓ(⌈ℓ/2⌉+1)C(ℓ,⌊ℓ/2⌋) = {bound}"),
            n as u128 >= bound,
            "Bushaw-Kettle kP_ℓ theorem",
        )
    } else {
        (unspecified(ls.iter().sum()), false, "Lidický-Liu-Palmer linear forest theorem")
    };
    Ok(FormulaResult::new(value, in_window, window, source))
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Prints `num/den - 1` as a decimal.
fn fmt_half(num: u64, den: u64) -> String {
    if num.is_multiple_of(den) {
        format!("{}", num / den - 1)
    } else {
        format!("{}.5", num / den - 1)
    }
}

/// `ex(n, kP_3) = C(k-1,2) + (k-1)(n-k+1) + ⌊(n-k+1)/2⌋`.
#[allow(non_snake_case)]
pub fn ex_kP3(n: u64, k: u64) -> Result<FormulaResult> {
    if k == 0 {
        return domain("k must be >= 1");
    }
    if n + 1 < k {
        return domain(format!("formula needs n >= k - 1, got n={n}, k={k}"));
    }
    let m = n + 1 - k;
    let value = c2(k - 1) + big(k - 1) * big(m) + big(m / 2);
    let r = if k == 1 {
        FormulaResult::new(value, true, "all n", "matching bound for P_3")
    } else {
        FormulaResult::new(
            value,
            n > 5 * k - 1,
            format!("n > 5k - 1 = {}", 5 * k - 1),
            "Yuan-Zhang kP_3 theorem",
        )
    };
    Ok(r)
}

/// `ex(n, F)` for a star forest: the maximum over `i` of
/// `(i-1)(n-i+1) + C(i-1,2) + ⌊(r_i-1)(n-i+1)/2⌋`. The 1-based maximizing
/// indices are reported in `argmax`.
pub fn ex_star_forest(n: u64, degrees: &[usize]) -> Result<FormulaResult> {
    if degrees.is_empty() || degrees.iter().any(|&r| r < 1) {
        return domain("star forest needs k >= 1 stars with degrees >= 1");
    }
    let rs = sorted_desc(degrees);
    let k = rs.len() as u64;
    if n < k {
        return domain(format!("formula needs n >= k = {k}, got {n}"));
    }
    let terms: Vec<BigCount> = rs
        .iter()
        .enumerate()
        .map(|(idx, &r)| {
            let i = idx as u64 + 1;
            let rest = n - i + 1;
            big(i - 1) * big(rest) + c2(i - 1) + big((r as u64 - 1) * rest / 2)
        })
        .collect();
    let best = terms.iter().max().expect("k >= 1").clone();
    let argmax = (0..terms.len()).filter(|&i| terms[i] == best).map(|i| i + 1).collect();
    let mut res = if k == 1 {
        FormulaResult::new(best, n >= rs[0] as u64, format!("n >= r = {}", rs[0]), "near-regular star extremal graphs")
    } else {
        let size = rs.iter().map(|r| r + 1).sum();
        FormulaResult::new(best, false, unspecified(size), "Lidický-Liu-Palmer star forest theorem")
    };
    res.argmax = Some(argmax);
    Ok(res)
}

/// Sun–Wang `ex(n, B_{4,s})` with `n = a(s+3) + b`.
pub fn ex_broom4(n: u64, s: u64) -> Result<FormulaResult> {
    if s < 1 {
        return domain("B_{4,s} formula needs s >= 1");
    }
    if n < s + 4 {
        return domain(format!("B_{{4,s}} formula needs n >= s + 4 = {}, got {n}", s + 4));
    }
    let m = s + 3;
    let (a, b) = (n / m, n % m);
    let value = if s >= 3 && (2..=s).contains(&b) {
        c2(m) * (a - 1) + big((s + 1) * (m + b) / 2)
    } else {
        c2(m) * a + c2(b)
    };
    Ok(FormulaResult::new(value, true, format!("n >= s + 4 = {}", s + 4), "Sun-Wang B_{4,s} theorem"))
}

/// `ex(n, B_{5,s})` where the reduction leaves a base instance with no
/// closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Broom5Reduction {
    /// `(a-1)·C(s+4, 2)`, the part contributed by the complete components.
    pub known: BigCount,
    /// Order of the base instance `ex(s+4+b, B_{5,s})`.
    pub base_n: u64,
    pub base_pattern: String,
    pub window: String,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Broom5 {
    Exact(FormulaResult),
    /// `known + ex(base_n, B_{5,s})`, the last term unspecified.
    Unspecified(Broom5Reduction),
}

/// Sun–Wang `ex(n, B_{5,s})` with `n = a(s+4) + b`: exact when
/// `b ∈ {0, s+1, s+2, s+3}`, otherwise the reduction to `s+4+b` vertices.
pub fn ex_broom5_partial(n: u64, s: u64) -> Result<Broom5> {
    if s < 1 {
        return domain("B_{5,s} formula needs s >= 1");
    }
    if n < s + 5 {
        return domain(format!("B_{{5,s}} formula needs n >= s + 5 = {}, got {n}", s + 5));
    }
    let m = s + 4;
    let (a, b) = (n / m, n % m);
    let window = format!("n >= s + 5 = {}", s + 5);
    let source = "Sun-Wang B_{5,s} theorem";
    if b == 0 || b > s {
        Ok(Broom5::Exact(FormulaResult::new(c2(m) * a + c2(b), true, window, source)))
    } else {
        Ok(Broom5::Unspecified(Broom5Reduction {
            known: c2(m) * (a - 1),
            base_n: m + b,
            base_pattern: format!("broom:5,{s}"),
            window,
            source: source.to_string(),
        }))
    }
}

/// `e_p(H(n,ℓ))` from its degree multiset; `ℓ >= 4`, `n >= ℓ`.
fn ep_h(n: u64, ell: usize, p: u32) -> BigCount {
    let b = ell as u64 / 2 - 1;
    if ell % 2 == 1 {
        pw(n - 1, p) * b + pw(b, p) * (n - b - 2) + pw(b + 1, p) * 2
    } else {
        pw(n - 1, p) * b + pw(b, p) * (n - b)
    }
}

/// `ex_p(n, P_ℓ)`: 0 for `ℓ = 2`, `e_p(M_n)` for `ℓ = 3`, and `e_p(H(n,ℓ))`
/// for `ℓ >= 4`.
pub fn exp_path(n: u64, ell: usize, p: u32) -> Result<FormulaResult> {
    need_p(p)?;
    match ell {
        0 | 1 => domain(format!("path order must be >= 2, got {ell}")),
        2 => Ok(FormulaResult::new(BigCount::zero(), true, "all n", "P_2-free graphs are empty")),
        3 => Ok(FormulaResult::new(big(n - n % 2), true, "all n", "maximum matching is the P_3 extremal graph")),
        _ => {
            if n < ell as u64 {
                return domain(format!("H(n,ℓ) needs n >= ℓ = {ell}, got {n}"));
            }
            let (window, _) = with_p(format!("unspecified n_0(ℓ) >= {ell}"), p, 2);
            Ok(FormulaResult::new(ep_h(n, ell, p), false, window, "Caro-Yuster path theorem"))
        }
    }
}

/// `ex_p(n, S_r)`, attained by `K_n` when `n <= r-1` and by a near
/// `(r-1)`-regular graph otherwise.
pub fn exp_star(n: u64, r: u64, p: u32) -> Result<FormulaResult> {
    need_p(p)?;
    if r < 1 {
        return domain("star degree must be >= 1");
    }
    let value = if n < r {
        pw(n.saturating_sub(1), p) * n
    } else if (r - 1) * n % 2 == 1 {
        pw(r - 1, p) * (n - 1) + pw(r - 2, p)
    } else {
        pw(r - 1, p) * n
    };
    Ok(FormulaResult::new(value, true, "all n", "Caro-Yuster star proposition"))
}

/// `e_p(G(n,k,r_k))` for a star forest with `k >= 2` components.
///
/// The `K_{k-1}` part has degree `n-1`; the near `(r_k-1)`-regular part has
/// degree `r_k+k-2`, except one vertex of degree `r_k+k-3` when both `r_k-1`
/// and `n-k+1` are odd. If either is even (including both) the first case
/// applies.
pub fn exp_star_forest(n: u64, degrees: &[usize], p: u32) -> Result<FormulaResult> {
    need_p(p)?;
    if degrees.iter().any(|&r| r < 1) {
        return domain("star degrees must be >= 1");
    }
    if degrees.len() < 2 {
        return domain("star forest formula needs k >= 2 stars; use exp_star for one star");
    }
    let rs = sorted_desc(degrees);
    let k = rs.len() as u64;
    let rk = *rs.last().expect("k >= 2") as u64;
    if n < k + rk - 1 {
        return domain(format!("G(n,k,r_k) needs n >= k + r_k - 1 = {}, got {n}", k + rk - 1));
    }
    let m = n - k + 1;
    let hi = pw(n - 1, p) * (k - 1);
    let value = if (rk - 1) % 2 == 1 && m % 2 == 1 {
        hi + pw(rk + k - 2, p) * (m - 1) + pw(rk + k - 3, p)
    } else {
        hi + pw(rk + k - 2, p) * m
    };
    let size = rs.iter().map(|r| r + 1).sum();
    let (window, _) = with_p(unspecified(size), p, 2);
    Ok(FormulaResult::new(value, false, window, "degree-power star forest theorem"))
}

/// `e_p(H(n,F))` for a linear forest `F`, with `b = Σ⌊ℓ_i/2⌋ - 1`.
pub fn exp_linear_forest(n: u64, lengths: &[usize], p: u32) -> Result<FormulaResult> {
    need_p(p)?;
    check_lengths(lengths)?;
    let ls = sorted_desc(lengths);
    if ls.len() == 1 {
        return exp_path(n, ls[0], p);
    }
    let b = cons::linear_forest_b(&ls).expect("k >= 2") as u64;
    if n < b + 2 {
        return domain(format!("H(n,F) needs n >= b + 2 = {}, got {n}", b + 2));
    }
    let value = if ls.iter().all(|l| l % 2 == 1) {
        pw(n - 1, p) * b + pw(b, p) * (n - b - 2) + pw(b + 1, p) * 2
    } else {
        pw(n - 1, p) * b + pw(b, p) * (n - b)
    };
    let (window, _) = with_p(unspecified(ls.iter().sum()), p, 2);
    Ok(FormulaResult::new(value, false, window, "degree-power linear forest theorem"))
}

/// `e_p(K_{k-1} + M_{n-k+1})`: the clique has degree `n-1`, matched
/// vertices degree `k`, and an unmatched vertex (when `n-k+1` is odd) `k-1`.
fn ep_join_matching(n: u64, k: u64, p: u32) -> BigCount {
    let m = n - k + 1;
    pw(n - 1, p) * (k - 1) + pw(k, p) * (m - m % 2) + pw(k - 1, p) * (m % 2)
}

/// `ex_p(n, kP_3)` candidate `e_p(K_{k-1} + M_{n-k+1})`.
#[allow(non_snake_case)]
pub fn exp_kP3(n: u64, k: u64, p: u32) -> Result<FormulaResult> {
    need_p(p)?;
    if k < 1 {
        return domain("k must be >= 1");
    }
    if k == 1 {
        return exp_path(n, 3, p);
    }
    if n < k {
        return domain(format!("K_(k-1) + M_(n-k+1) needs n >= k, got n={n}, k={k}"));
    }
    let (window, _) = with_p(format!("unspecified n_0(k) >= {}", 3 * k), p, 2);
    Ok(FormulaResult::new(ep_join_matching(n, k, p), false, window, "degree-power kP_3 corollary"))
}

/// `ex_p(n, B_{ℓ,s})` for `ℓ ∈ {4, 5, 6, 7}`.
pub fn exp_broom(n: u64, ell: usize, s: u64, p: u32) -> Result<FormulaResult> {
    need_p(p)?;
    let (value, threshold, source) = match (ell, s) {
        (4, 0) => return exp_path(n, 4, p),
        (4, _) => {
            if n < 1 {
                return domain("n must be >= 1");
            }
            (pw(n - 1, p) + big(n - 1), 2 * (s + 4), "Caro-Yuster B_{4,s} proposition")
        }
        (5, 0) => (exp_path(n, 5, p)?.value, (2 * s + 10).pow(2), "degree-power B_{5,s} theorem"),
        (5, _) => {
            if n < 2 {
                return domain("K_1 + M_(n-1) needs n >= 2");
            }
            (ep_join_matching(n, 2, p), (2 * s + 10).pow(2), "degree-power B_{5,s} theorem")
        }
        (6, _) => (exp_path(n, 6, p)?.value, (2 * s + 12).pow(2), "degree-power B_{6,s} theorem"),
        (7, _) => (exp_path(n, 7, p)?.value, (3 * s + 31).pow(2), "degree-power B_{7,s} theorem"),
        _ => return domain(format!("broom formulas cover ell in 4..=7, got {ell}")),
    };
    let (window, p_ok) = with_p(format!("n > {threshold}"), p, 2);
    Ok(FormulaResult::new(value, p_ok && n > threshold, window, source))
}

/// `e_p(T_r(n))`, which equals `ex_p(n, K_{r+1})` for `p ∈ {1, 2, 3}`.
pub fn exp_turan_clique(n: u64, r: u64, p: u32) -> Result<FormulaResult> {
    need_p(p)?;
    if r < 1 {
        return domain("r must be >= 1");
    }
    let value = cons::turan_parts(n as usize, r as usize)
        .into_iter()
        .map(|size| pw(n - size as u64, p) * size as u64)
        .sum();
    Ok(FormulaResult::new(value, p <= 3, "p in {1, 2, 3}", "Turán graph degree power sum"))
}

/// Which extremal family a lemma check runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaVariant {
    /// `K_1 + M_{n-1}`, only for `ℓ = 5`.
    JoinMatching,
    /// `H(n, ℓ)`.
    HPath,
}

impl std::str::FromStr for LemmaVariant {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "join-matching" => Ok(LemmaVariant::JoinMatching),
            "b" | "h-path" => Ok(LemmaVariant::HPath),
            _ => Err(crate::error::Error::Parse(format!("unknown lemma variant `{s}`; use a or b"))),
        }
    }
}

fn lemma_family(ell: usize, n: u64, p: u32, variant: LemmaVariant) -> Result<BigCount> {
    match variant {
        LemmaVariant::JoinMatching => {
            if ell != 5 {
                return domain(format!("the K_1 + M variant is for ell = 5 only, got {ell}"));
            }
            if n < 2 {
                return domain("K_1 + M_(n-1) needs n >= 2");
            }
            Ok(ep_join_matching(n, 2, p))
        }
        LemmaVariant::HPath => {
            if ell < 5 {
                return domain(format!("the H(n,ell) variant needs ell >= 5, got {ell}"));
            }
            Ok(ep_h(n, ell, p))
        }
    }
}

/// Degree cap `d(ℓ, s)` used by the absorption step for `ℓ ∈ {5, 6, 7}`.
pub fn absorb_degree(ell: usize, s: u64) -> Result<u64> {
    match ell {
        5 => Ok(s + 5),
        6 => Ok(s + 6),
        7 => Ok(2 * s + 24),
        _ => domain(format!("d(ell, s) is defined for ell in 5..=7, got {ell}")),
    }
}

/// Whether `X(n1) + X(n2) < X(n1 + n2)` for `X = e_p` of the chosen family.
pub fn lemma_superadd_check(
    ell: usize,
    n1: u64,
    n2: u64,
    p: u32,
    variant: LemmaVariant,
) -> Result<bool> {
    if p < 2 {
        return domain("superadditivity needs p >= 2");
    }
    if n1 < ell as u64 || n2 < ell as u64 {
        return domain(format!("superadditivity needs n1, n2 >= ell = {ell}"));
    }
    let lhs = lemma_family(ell, n1, p, variant)? + lemma_family(ell, n2, p, variant)?;
    Ok(lhs < lemma_family(ell, n1 + n2, p, variant)?)
}

/// Whether `X(h) + h*·d^p < X(h + h*)`, the worst case for a graph on `h*`
/// vertices with maximum degree at most `d`, given `n = h + h* > (ℓ+s+d)^2`.
#[allow(clippy::too_many_arguments)]
pub fn lemma_absorb_check(
    ell: usize,
    s: u64,
    h: u64,
    hstar: u64,
    d: u64,
    p: u32,
    variant: LemmaVariant,
) -> Result<bool> {
    if p < 2 {
        return domain("absorption needs p >= 2");
    }
    if h < ell as u64 {
        return domain(format!("absorption needs h >= ell = {ell}, got {h}"));
    }
    if hstar == 0 {
        return domain("absorption needs h* > 0");
    }
    let n = h + hstar;
    let threshold = (ell as u64 + s + d).pow(2);
    if n <= threshold {
        return domain(format!("absorption needs n = h + h* > (ell+s+d)^2 = {threshold}, got {n}"));
    }
    let lhs = lemma_family(ell, h, p, variant)? + pw(d, p) * hstar;
    Ok(lhs < lemma_family(ell, n, p, variant)?)
}
