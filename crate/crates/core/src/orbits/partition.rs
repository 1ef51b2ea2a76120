use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactcore::Scalar;
use crate::splie::MatF;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Half the size, when the size is even.
    pub fn half_size(&self) -> Option<usize> {
        let s = self.size();
        (s % 2 == 0).then_some(s / 2)
    }

    fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Jordan type of a nilpotent in sp: every odd part has even multiplicity.
    pub fn is_symplectic(&self) -> bool {
        self.half_size().is_some()
            && self
                .parts
                .iter()
                .filter(|&&p| p % 2 == 1)
                .all(|&p| self.multiplicity(p) % 2 == 0)
    }

    /// Every part is even.
    pub fn is_even(&self) -> bool {
        self.half_size().is_some() && self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Vec<usize> {
        let max = self.parts.first().copied().unwrap_or(0);
        (1..=max)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count())
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `total`, in reverse lexicographic order.
fn partitions_of(total: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

/// `(P_n, 𝒫_n)`: symplectic Jordan types of size `2n`, and the all-even ones.
pub fn enum_partitions(n: usize) -> (Vec<Partition>, Vec<Partition>) {
    let all: Vec<Partition> = partitions_of(2 * n)
        .into_iter()
        .filter(Partition::is_symplectic)
        .collect();
    let even = all.iter().filter(|p| p.is_even()).cloned().collect();
    (all, even)
}

/// Canonical nilpotent of Jordan type `λ` in sp(2n).
///
/// Each even part `2m` takes `m` fresh indices `s_1..s_m` and becomes one
/// chain `f_{s_1} → −f_{s_2} → ⋯ → ±f_{s_m} → e_{s_m} → ⋯ → e_{s_1} → 0`
/// (a Jordan shift in the `A` block plus `B_{s_m,s_m} = 1`). Each pair of
/// equal odd parts `k` takes `k` indices and becomes two chains of length `k`,
/// one in `e`-span and its dual in `f`-span. Here `e_i`, `f_i = e_{i+n}` is the
/// standard symplectic basis.
pub fn nilpotent_rep(lambda: &Partition) -> Result<MatF> {
    if !lambda.is_symplectic() {
        return Err(Error::NotInPn(lambda.to_string()));
    }
    let n = lambda.half_size().expect("symplectic partitions have even size");
    let mut y = MatF::zero(n);
    let mut next = 0;
    let shift = |y: &mut MatF, start: usize, len: usize| {
        for k in 1..len {
            // A block: e_{start+k} ↦ e_{start+k−1}; D = −Aᵀ follows
            let (r, c) = (start + k - 1, start + k);
            y.set(r, c, Scalar::one());
            y.set(c + n, r + n, -Scalar::one());
        }
    };
    let mut odd_pending: Option<usize> = None;
    for &p in lambda.parts() {
        if p % 2 == 0 {
            let m = p / 2;
            shift(&mut y, next, m);
            y.set(next + m - 1, next + m - 1 + n, Scalar::one());
            next += m;
        } else if odd_pending.take().is_none() {
            odd_pending = Some(p);
        } else {
            shift(&mut y, next, p);
            next += p;
        }
    }
    debug_assert_eq!(next, n);
    Ok(y)
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(y: &MatF) -> Result<Partition> {
    if !y.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let dim = y.dim();
    // r_k = rank(y^k), r_0 = dim; #blocks of size ≥ k is r_{k−1} − r_k
    let mut ranks = vec![dim];
    let mut p = y.clone();
    while *ranks.last().unwrap() > 0 {
        ranks.push(p.rank());
        p = &p * y;
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (k, &c) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat(k + 1).take(c - next));
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_enumerations() {
        let (all, even) = enum_partitions(1);
        assert_eq!(all, vec![p("(2)"), p("(1,1)")]);
        assert_eq!(even, vec![p("(2)")]);
        let (all, even) = enum_partitions(2);
        assert_eq!(all, vec![p("(4)"), p("(2,2)"), p("(2,1,1)"), p("(1,1,1,1)")]);
        assert_eq!(even, vec![p("(4)"), p("(2,2)")]);
        assert!(!p("(3,1)").is_symplectic());
    }

    #[test]
    fn representatives() {
        assert_eq!(nilpotent_rep(&p("(2)")).unwrap(), MatF::elementary(1, 0, 1));
        assert!(nilpotent_rep(&p("(1,1)")).unwrap().is_zero());
        let y = nilpotent_rep(&p("(2,2)")).unwrap();
        assert!(y.is_sp());
        assert_eq!(y.power_ranks(), vec![2, 0]);
        assert_eq!(
            nilpotent_rep(&p("(3,1)")),
            Err(Error::NotInPn("(3,1)".into()))
        );
    }

    #[test]
    fn jordan_type_recovers_partition() {
        for n in 1..=4 {
            for lambda in enum_partitions(n).0 {
                let y = nilpotent_rep(&lambda).unwrap();
                assert!(y.is_sp(), "{lambda}");
                assert_eq!(jordan_type(&y).unwrap(), lambda);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("(1,2,1)").to_string(), "(2,1,1)");
        assert!("(2,0)".parse::<Partition>().is_err());
        assert_eq!(p("(3,3,2)").conjugate(), vec![3, 3, 2]);
        assert_eq!(p("(4)").conjugate(), vec![1, 1, 1, 1]);
    }
}
