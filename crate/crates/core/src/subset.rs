//! Subsets of `{0, …, n-1}` as `u64` bitmasks, ranked in colexicographic
//! order by the combinatorial number system:
//! `rank({c_1 < … < c_k}) = C(c_1, 1) + C(c_2, 2) + … + C(c_k, k)`.
//!
//! Colex order on masks coincides with numeric order, which is what the
//! Gosper-style successor below walks.

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

const fn binomial_table() -> [[u64; MAX_GROUND + 1]; MAX_GROUND + 1] {
    let mut t = [[0u64; MAX_GROUND + 1]; MAX_GROUND + 1];
    let mut n = 0;
    while n <= MAX_GROUND {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            k += 1;
        }
        n += 1;
    }
    t
}

static BINOMIAL: [[u64; MAX_GROUND + 1]; MAX_GROUND + 1] = binomial_table();

/// `C(n, k)` for `n ≤ 64`; zero when `k > n`.
#[inline]
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        0
    } else {
        BINOMIAL[n][k]
    }
}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Colex rank of a mask among masks of the same popcount.
#[inline]
pub fn rank(mask: u64) -> usize {
    let mut r = 0u64;
    let mut m = mask;
    let mut i = 1;
    while m != 0 {
        let c = m.trailing_zeros() as usize;
        r += BINOMIAL[c][i];
        i += 1;
        m &= m - 1;
    }
    r as usize
}

/// Inverse of [`rank`] for `k`-subsets.
pub fn unrank(mut r: u64, k: usize) -> u64 {
    let mut mask = 0u64;
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= r
        let mut c = i - 1;
        while c + 1 < MAX_GROUND && BINOMIAL[c + 1][i] <= r {
            c += 1;
        }
        r -= BINOMIAL[c][i];
        mask |= 1u64 << c;
    }
    mask
}

/// Mask of a list of distinct indices; `None` on a repeat or an index ≥ 64.
pub fn mask_of(indices: &[usize]) -> Option<u64> {
    let mut mask = 0u64;
    for &i in indices {
        if i >= MAX_GROUND || mask & (1u64 << i) != 0 {
            return None;
        }
        mask |= 1u64 << i;
    }
    Some(mask)
}

/// Elements of a mask in increasing order.
pub fn elements(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let c = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(c)
        }
    })
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    elements(mask).collect()
}

/// Iterator over all `k`-subsets of `{0, …, n-1}` in colex order, so the
/// `i`-th item has rank `i`.
#[derive(Clone, Debug)]
pub struct Subsets {
    next: Option<u128>,
    limit: u128,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set larger than {MAX_GROUND}");
        let next = if k > n { None } else { Some((1u128 << k) - 1) };
        Subsets {
            next,
            limit: 1u128 << n,
        }
    }
}

impl Iterator for Subsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let x = self.next?;
        self.next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let succ = (((r ^ x) >> 2) / c) | r;
            (succ < self.limit).then_some(succ)
        };
        Some(x as u64)
    }
}

/// `k`-subsets of the elements of `universe`, in colex order.
pub fn subsets_of(universe: u64, k: usize) -> impl Iterator<Item = u64> {
    let members = to_vec(universe);
    Subsets::new(members.len(), k).map(move |m| elements(m).fold(0u64, |acc, i| acc | (1u64 << members[i])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn enumeration_is_colex_and_ranked() {
        for n in 0..=8 {
            for k in 0..=n + 1 {
                let all: Vec<u64> = Subsets::new(n, k).collect();
                assert_eq!(all.len() as u64, binomial(n, k), "n={n} k={k}");
                for (i, &m) in all.iter().enumerate() {
                    assert_eq!(m.count_ones() as usize, k);
                    assert_eq!(rank(m), i);
                    assert_eq!(unrank(i as u64, k), m);
                }
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn colex_order_small_case() {
        let pairs: Vec<Vec<usize>> = Subsets::new(4, 2).map(to_vec).collect();
        assert_eq!(
            pairs,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn full_ground_set_terminates() {
        assert_eq!(Subsets::new(64, 64).count(), 1);
        assert_eq!(Subsets::new(64, 1).count(), 64);
        assert_eq!(Subsets::new(64, 0).count(), 1);
    }

    #[test]
    fn subsets_of_universe() {
        let u = 0b10110;
        let got: Vec<u64> = subsets_of(u, 2).collect();
        assert_eq!(got, vec![0b00110, 0b10010, 0b10100]);
    }

    #[test]
    fn mask_of_rejects_repeats() {
        assert_eq!(mask_of(&[2, 0]), Some(0b101));
        assert_eq!(mask_of(&[1, 1]), None);
        assert_eq!(mask_of(&[64]), None);
    }
}
