//! Brute-force enumerators for the restricted partition functions attached to
//! omega and nu, and the overpartition counts p*, p_* and p'.
//!
//! Each enumerator walks the partitions of `n` in reverse lexicographic order
//! and filters or weights them; none of them consults a generating function,
//! so [`crosscheck`] compares two independent computations.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::mock::{Family, MockSpec};
use crate::qkit::{Expr, HyperFamily, Len, Poch};
use crate::ring::{Monomial, QSeries};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    /// Weakly decreasing, possibly ending in zeros.
    pub parts: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overpartition {
    /// Weakly decreasing by value; an overlined copy precedes plain copies.
    pub parts: Vec<(u32, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumResult<T> {
    pub n: u32,
    pub count: u64,
    pub items: Option<Vec<T>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartFamily {
    POmega,
    PNu,
    PStar,
    PSubstar,
    PPrime,
    Overpartitions,
}

impl PartFamily {
    pub const ALL: [PartFamily; 6] = [
        PartFamily::POmega,
        PartFamily::PNu,
        PartFamily::PStar,
        PartFamily::PSubstar,
        PartFamily::PPrime,
        PartFamily::Overpartitions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PartFamily::POmega => "p_omega",
            PartFamily::PNu => "p_nu",
            PartFamily::PStar => "p_star",
            PartFamily::PSubstar => "p_substar",
            PartFamily::PPrime => "p_prime",
            PartFamily::Overpartitions => "overpartitions",
        }
    }

    pub fn from_name(name: &str) -> Result<PartFamily> {
        PartFamily::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Smallest `n` the enumerator accepts.
    pub fn min_n(self) -> u32 {
        match self {
            PartFamily::PNu | PartFamily::PPrime => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join("+"))
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .parts
            .iter()
            .map(|&(v, o)| if o { format!("{v}~") } else { v.to_string() })
            .collect();
        f.write_str(&s.join("+"))
    }
}

#[derive(Serialize)]
struct PartJson {
    value: u32,
    over: bool,
}

impl Partition {
    pub fn to_json(&self) -> Value {
        json!(self
            .parts
            .iter()
            .map(|&v| PartJson {
                value: v,
                over: false
            })
            .collect::<Vec<_>>())
    }
}

impl Overpartition {
    pub fn to_json(&self) -> Value {
        json!(self
            .parts
            .iter()
            .map(|&(value, over)| PartJson { value, over })
            .collect::<Vec<_>>())
    }
}

/// Calls `f` on every partition of `n` into positive parts, largest part first,
/// in reverse lexicographic order.
pub fn for_each_partition(n: u32, mut f: impl FnMut(&[u32])) {
    fn go(rest: u32, max: u32, acc: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if rest == 0 {
            f(acc);
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            acc.push(p);
            go(rest - p, p, acc, f);
            acc.pop();
        }
    }
    go(n, n, &mut Vec::new(), &mut f);
}

/// `(value, multiplicity)` pairs in decreasing order of value.
fn multiplicities(parts: &[u32]) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((v, m)) if *v == p => *m += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

fn with_zeros(parts: &[u32], zeros: usize) -> Vec<u32> {
    let mut v = parts.to_vec();
    v.extend(std::iter::repeat_n(0, zeros));
    v
}

fn positive(n: i64, what: &str) -> Result<u32> {
    u32::try_from(n)
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::InvalidInput(format!("{what} needs n >= 1, got {n}")))
}

fn non_negative(n: i64, what: &str) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::InvalidInput(format!("{what} needs n >= 0, got {n}")))
}

fn collect<T>(
    n: u32,
    list: bool,
    mut visit: impl FnMut(&mut dyn FnMut(u64, Option<T>)),
) -> EnumResult<T> {
    let mut count = 0u64;
    let mut items = list.then(Vec::new);
    visit(&mut |w, item| {
        count += w;
        if let (Some(items), Some(item)) = (items.as_mut(), item) {
            items.push(item);
        }
    });
    EnumResult { n, count, items }
}

/// Partitions of `n` whose odd parts are all less than twice the smallest part.
pub fn p_omega(n: i64, list: bool) -> Result<EnumResult<Partition>> {
    let n = positive(n, "p_omega")?;
    Ok(collect(n, list, |emit| {
        for_each_partition(n, |parts| {
            let s = *parts.last().unwrap();
            if parts.iter().all(|&p| p % 2 == 0 || p < 2 * s) {
                emit(
                    1,
                    list.then(|| Partition {
                        parts: parts.to_vec(),
                    }),
                );
            }
        })
    }))
}

/// Partitions of `n` into distinct non-negative parts whose odd parts are all
/// less than twice the smallest part.
pub fn p_nu(n: i64, list: bool) -> Result<EnumResult<Partition>> {
    let n = non_negative(n, "p_nu")?;
    Ok(collect(n, list, |emit| {
        for_each_partition(n, |parts| {
            if parts.windows(2).any(|w| w[0] == w[1]) {
                return;
            }
            for zeros in 0..=1 {
                let lam = with_zeros(parts, zeros);
                let Some(&s) = lam.last() else { continue };
                if lam.iter().all(|&p| p % 2 == 0 || p < 2 * s) {
                    emit(1, list.then_some(Partition { parts: lam }));
                }
            }
        })
    }))
}

/// Every way of overlining the first copy of some values of `parts`, each
/// value in `free` optional and each other value forced.
fn overline_choices(mults: &[(u32, u32)], free: &[bool]) -> Vec<Overpartition> {
    let mut out = vec![Vec::new()];
    for (&(v, m), &f) in mults.iter().zip(free) {
        let options: &[bool] = if f { &[true, false] } else { &[true] };
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<(u32, bool)>| {
                options.iter().map(move |&o| {
                    let mut p = prefix.clone();
                    p.push((v, o));
                    p.extend(std::iter::repeat_n((v, false), m as usize - 1));
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|parts| Overpartition { parts })
        .collect()
}

/// Overpartitions of `n` into positive parts.
pub fn overpartition_count(n: i64, list: bool) -> Result<EnumResult<Overpartition>> {
    let n = positive(n, "overpartitions")?;
    Ok(collect(n, list, |emit| {
        for_each_partition(n, |parts| {
            let mults = multiplicities(parts);
            if list {
                for o in overline_choices(&mults, &vec![true; mults.len()]) {
                    emit(1, Some(o));
                }
            } else {
                emit(1 << mults.len(), None);
            }
        })
    }))
}

/// The p* overpartitions of `n`: the smallest part `s` (possibly 0) appears
/// once; every even part and every odd part below `2s` is distinct and
/// overlined; odd parts above `2s` repeat freely and their first copy may be
/// overlined.
pub fn p_star(n: i64, list: bool) -> Result<EnumResult<Overpartition>> {
    let n = positive(n, "p_star")?;
    Ok(collect(n, list, |emit| {
        for_each_partition(n, |parts| {
            for zeros in 0..=1 {
                let lam = with_zeros(parts, zeros);
                let s = *lam.last().unwrap();
                let mults = multiplicities(&lam);
                let forced = |v: u32| v.is_multiple_of(2) || v < 2 * s;
                if mults.iter().any(|&(v, m)| forced(v) && m != 1) {
                    continue;
                }
                let free: Vec<bool> = mults.iter().map(|&(v, _)| !forced(v)).collect();
                if list {
                    for o in overline_choices(&mults, &free) {
                        emit(1, Some(o));
                    }
                } else {
                    emit(1 << free.iter().filter(|&&f| f).count(), None);
                }
            }
        })
    }))
}

/// Weighted count over partitions of `n` into odd parts: each distinct part
/// below the largest weighs its multiplicity plus one, the largest weighs its
/// multiplicity.
pub fn p_substar(n: i64) -> Result<u64> {
    let n = positive(n, "p_substar")?;
    let mut total = 0;
    for_each_partition(n, |parts| {
        if parts.iter().any(|p| p % 2 == 0) {
            return;
        }
        let mults = multiplicities(parts);
        let w: u64 = mults
            .iter()
            .enumerate()
            .map(|(i, &(_, m))| if i == 0 { m as u64 } else { m as u64 + 1 })
            .product();
        total += w;
    });
    Ok(total)
}

/// Partitions of `n` into non-negative parts where the smallest part appears
/// at most twice (0 at most once), the other parts are distinct and every even
/// part is less than twice the smallest part.
pub fn p_prime(n: i64, list: bool) -> Result<EnumResult<Partition>> {
    let n = non_negative(n, "p_prime")?;
    let ok = |lam: &[u32]| {
        let s = *lam.last().unwrap();
        let mults = multiplicities(lam);
        let small = mults.last().unwrap().1;
        if small > if s == 0 { 1 } else { 2 } {
            return false;
        }
        mults[..mults.len() - 1].iter().all(|&(_, m)| m == 1)
            && lam.iter().all(|&p| p % 2 == 1 || p == 0 || p < 2 * s)
    };
    Ok(collect(n, list, |emit| {
        for_each_partition(n, |parts| {
            for zeros in 0..=2 {
                let lam = with_zeros(parts, zeros);
                if !lam.is_empty() && ok(&lam) {
                    emit(1, list.then_some(Partition { parts: lam }));
                }
            }
        })
    }))
}

/// Count for any family; `p_substar` has no item list.
pub fn count(family: PartFamily, n: i64) -> Result<u64> {
    Ok(match family {
        PartFamily::POmega => p_omega(n, false)?.count,
        PartFamily::PNu => p_nu(n, false)?.count,
        PartFamily::PStar => p_star(n, false)?.count,
        PartFamily::PSubstar => p_substar(n)?,
        PartFamily::PPrime => p_prime(n, false)?.count,
        PartFamily::Overpartitions => overpartition_count(n, false)?.count,
    })
}

/// Renders the listed items of a family at `n`, one per entry.
pub fn listing(family: PartFamily, n: i64) -> Result<(u64, Vec<(String, Value)>)> {
    fn plain(r: EnumResult<Partition>) -> (u64, Vec<(String, Value)>) {
        (
            r.count,
            r.items
                .unwrap_or_default()
                .iter()
                .map(|p| (p.to_string(), p.to_json()))
                .collect(),
        )
    }
    fn over(r: EnumResult<Overpartition>) -> (u64, Vec<(String, Value)>) {
        (
            r.count,
            r.items
                .unwrap_or_default()
                .iter()
                .map(|p| (p.to_string(), p.to_json()))
                .collect(),
        )
    }
    Ok(match family {
        PartFamily::POmega => plain(p_omega(n, true)?),
        PartFamily::PNu => plain(p_nu(n, true)?),
        PartFamily::PPrime => plain(p_prime(n, true)?),
        PartFamily::PStar => over(p_star(n, true)?),
        PartFamily::Overpartitions => over(overpartition_count(n, true)?),
        PartFamily::PSubstar => {
            return Err(Error::InvalidInput(
                "p_substar is a weighted count and has no item list".into(),
            ))
        }
    })
}

fn p(arg: Monomial, off: i64, step: i64, len: Len) -> Poch {
    Poch::new(arg, step, len).shift(off, 0)
}

/// The generating function each enumerator is checked against.
pub fn generating_function(family: PartFamily) -> Result<Expr> {
    let one = Monomial::one;
    let neg = || Monomial::int(-1);
    Ok(match family {
        PartFamily::POmega => MockSpec::new(Family::Omega, vec![])
            .expr()?
            .scale(Monomial::q(1)),
        PartFamily::PNu => MockSpec::new(Family::Nu, vec![]).qsign(-1).expr()?,
        // sum_n q^n (-q^(n+1);q)_inf / (q^(2n+1);q^2)_inf
        PartFamily::PStar => HyperFamily::new()
            .quad(0, 2, 0)
            .with(p(neg(), 1, 1, Len::Inf).shift(0, 1))
            .with(p(one(), 1, 2, Len::Inf).shift(0, 2).inv())
            .into(),
        // sum_n q^(2n+1) / (q;q^2)_(n+1)^2
        PartFamily::PSubstar => HyperFamily::new()
            .quad(0, 4, 1)
            .with(p(one(), 1, 2, Len::Fin(1, 1)).pow(-2))
            .into(),
        // sum_n q^n (-q^n;q)_n (-q^(2n+1);q^2)_inf
        PartFamily::PPrime => HyperFamily::new()
            .quad(0, 2, 0)
            .with(p(neg(), 0, 1, Len::Fin(1, 0)).shift(0, 1))
            .with(p(neg(), 1, 2, Len::Inf).shift(0, 2))
            .into(),
        // (-q;q)_inf / (q;q)_inf
        PartFamily::Overpartitions => Expr::product(
            one(),
            [p(neg(), 1, 1, Len::Inf), p(one(), 1, 1, Len::Inf).inv()],
        ),
    })
}

/// `sum_{min_n <= n <= max_n} count(n) q^n`, known through `q^max_n`.
pub fn counting_series(family: PartFamily, max_n: i64) -> Result<QSeries> {
    let mut terms = BTreeMap::new();
    for n in family.min_n() as i64..=max_n {
        let c = count(family, n)?;
        terms.insert(
            n,
            crate::ring::LaurentPoly::constant(crate::ring::Int::from(c as i64)),
        );
    }
    Ok(QSeries::from_terms(terms, max_n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub family: PartFamily,
    pub max_n: i64,
    /// First `(n, enumerated, series coefficient)` that disagrees.
    pub first_mismatch: Option<(i64, u64, String)>,
}

impl CrossCheck {
    pub fn ok(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the enumerator against its generating function for
/// `min_n <= n <= max_n`.
pub fn crosscheck(family: PartFamily, max_n: i64) -> Result<CrossCheck> {
    if max_n < family.min_n() as i64 {
        return Err(Error::InvalidInput(format!(
            "max-n must be at least {}",
            family.min_n()
        )));
    }
    let gf = generating_function(family)?.eval(max_n)?;
    let mut first_mismatch = None;
    for n in family.min_n() as i64..=max_n {
        let c = count(family, n)?;
        let coeff = gf.coeff(n);
        if *coeff != crate::ring::LaurentPoly::constant(crate::ring::Int::from(c as i64)) {
            first_mismatch = Some((n, c, coeff.to_string()));
            break;
        }
    }
    Ok(CrossCheck {
        family,
        max_n,
        first_mismatch,
    })
}

/// `(-1)^j` when `n = 3j^2 + 2j` or `n = 3j^2 + 4j + 1` for some `j >= 0`, else 0.
pub fn pentagonal_sign(n: i64) -> i64 {
    let mut j = 0;
    while 3 * j * j + 2 * j <= n {
        if n == 3 * j * j + 2 * j || n == 3 * j * j + 4 * j + 1 {
            return if j % 2 == 0 { 1 } else { -1 };
        }
        j += 1;
    }
    0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PntRow {
    pub n: i64,
    pub difference: i64,
    pub predicted: i64,
}

/// `p*(n) - 2 p_*(n)` next to the pentagonal prediction for `1 <= n <= up_to`.
pub fn pnt_check(up_to: i64) -> Result<Vec<PntRow>> {
    (1..=up_to)
        .map(|n| {
            let d = p_star(n, false)?.count as i64 - 2 * p_substar(n)? as i64;
            Ok(PntRow {
                n,
                difference: d,
                predicted: pentagonal_sign(n),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityVerdict {
    pub up_to: i64,
    /// `p'(0) = 1` and `p'(n)` even for `1 <= n <= up_to`.
    pub p_prime_even: bool,
    /// `p*(n)` odd exactly at the pentagonal-type `n`.
    pub p_star_odd_at_pentagonal: bool,
    pub failures: Vec<String>,
}

impl ParityVerdict {
    pub fn ok(&self) -> bool {
        self.p_prime_even && self.p_star_odd_at_pentagonal
    }
}

pub fn parity_check(up_to: i64) -> Result<ParityVerdict> {
    let mut failures = Vec::new();
    if p_prime(0, false)?.count != 1 {
        failures.push("p'(0) != 1".to_string());
    }
    let p_prime_fail = failures.len();
    for n in 1..=up_to {
        let c = p_prime(n, false)?.count;
        if c % 2 != 0 {
            failures.push(format!("p'({n}) = {c} is odd"));
        }
    }
    let p_prime_even = failures.len() == p_prime_fail && p_prime_fail == 0;
    let before = failures.len();
    for n in 1..=up_to {
        let c = p_star(n, false)?.count;
        if (c % 2 == 1) != (pentagonal_sign(n) != 0) {
            failures.push(format!("p*({n}) = {c} has the wrong parity"));
        }
    }
    let p_star_odd_at_pentagonal = failures.len() == before;
    Ok(ParityVerdict {
        up_to,
        p_prime_even,
        p_star_odd_at_pentagonal,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(p_omega(1, false).unwrap().count, 1);
        assert_eq!(p_omega(2, false).unwrap().count, 2);
        assert_eq!(p_nu(1, false).unwrap().count, 1);
        assert_eq!(overpartition_count(1, false).unwrap().count, 2);
        assert_eq!(overpartition_count(3, false).unwrap().count, 8);
        assert_eq!(p_star(5, false).unwrap().count, 17);
        assert_eq!(p_substar(5).unwrap(), 9);
        assert_eq!(p_prime(5, false).unwrap().count, 4);
    }

    #[test]
    fn listing_matches_count() {
        for n in 1..=9 {
            let r = p_star(n, true).unwrap();
            assert_eq!(r.items.unwrap().len() as u64, r.count);
            let r = overpartition_count(n, true).unwrap();
            assert_eq!(r.items.unwrap().len() as u64, r.count);
        }
    }

    #[test]
    fn rendering() {
        let o = Overpartition {
            parts: vec![(4, true), (1, false), (0, true)],
        };
        assert_eq!(o.to_string(), "4~+1+0~");
        assert_eq!(Partition { parts: vec![3, 2] }.to_string(), "3+2");
    }

    #[test]
    fn domain_errors() {
        assert!(p_omega(0, false).is_err());
        assert!(p_nu(-1, false).is_err());
        assert!(p_prime(-1, false).is_err());
        assert!(p_substar(0).is_err());
    }
}

#[cfg(test)]
mod gf_tests {
    use super::*;

    #[test]
    fn enumerators_match_generating_functions() {
        for f in PartFamily::ALL {
            let c = crosscheck(f, 14).unwrap();
            assert!(c.ok(), "{}: {:?}", f.name(), c.first_mismatch);
        }
    }
}
