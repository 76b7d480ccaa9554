//! Localization of Chern numbers to the fixed points.
//!
//! For a monomial `c_ω = c_{ω_1} ⋯ c_{ω_r}` the localized value is
//!
//! ```text
//!     Σ_p  Π_j e_{ω_j}(w(p)) / e_n(w(p))
//! ```
//!
//! where `w(p)` are the weights at the fixed point `p` and `e_i` the
//! elementary symmetric polynomials. For `deg ω < n` this must vanish, for
//! `deg ω = n` it is the Chern number and must be an integer.

use num_rational::Ratio;

use crate::data::FixedPointData;
use crate::error::{Error, Result};
use crate::scalar::{self, IntScalar};
use crate::symmetric::{elem_sym_all, partitions, partitions_up_to, Partition};

fn check_partition(n: usize, omega: &Partition) -> Result<()> {
    if omega.largest_part() > n {
        return Err(Error::PartTooLarge {
            part: omega.largest_part(),
            n,
        });
    }
    if omega.degree() > n {
        return Err(Error::DegreeTooLarge {
            degree: omega.degree(),
            n,
        });
    }
    Ok(())
}

/// Per-point `e_0..e_n`, computed once and reused across partitions.
struct PointSymmetrics<T> {
    rows: Vec<Vec<T>>,
}

impl<T: IntScalar> PointSymmetrics<T> {
    fn new(data: &FixedPointData<T>) -> Result<Self> {
        let rows = data
            .points()
            .iter()
            .map(|p| elem_sym_all(p.weights()))
            .collect::<Result<_>>()?;
        Ok(Self { rows })
    }

    fn sum(&self, omega: &Partition) -> Result<Ratio<T>> {
        let mut total = Ratio::from_integer(T::zero());
        for e in &self.rows {
            let mut num = T::one();
            for &part in omega.parts() {
                num = scalar::mul(&num, &e[part])?;
            }
            let top = e.last().expect("e_n present").clone();
            let term = scalar::ratio_div(&Ratio::from_integer(num), &Ratio::from_integer(top))?;
            total = scalar::ratio_add(&total, &term)?;
        }
        Ok(total)
    }
}

/// Exact localized value of the monomial `ω`.
pub fn localization_sum<T: IntScalar>(data: &FixedPointData<T>, omega: &Partition) -> Result<Ratio<T>> {
    check_partition(data.complex_dimension(), omega)?;
    PointSymmetrics::new(data)?.sum(omega)
}

/// Localized values for every partition of every degree `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernTable<T: IntScalar> {
    n: usize,
    entries: Vec<(Partition, Ratio<T>)>,
}

impl<T: IntScalar> ChernTable<T> {
    pub fn complex_dimension(&self) -> usize {
        self.n
    }

    /// All entries, ascending degree, reverse-lexicographic within a degree.
    pub fn entries(&self) -> &[(Partition, Ratio<T>)] {
        &self.entries
    }

    /// Degree-`n` entries: the Chern numbers proper.
    pub fn chern_numbers(&self) -> impl Iterator<Item = &(Partition, Ratio<T>)> {
        let n = self.n;
        self.entries.iter().filter(move |(p, _)| p.degree() == n)
    }

    /// Degree `< n` entries, all of which vanish for genuine actions.
    pub fn sub_top(&self) -> impl Iterator<Item = &(Partition, Ratio<T>)> {
        let n = self.n;
        self.entries.iter().filter(move |(p, _)| p.degree() < n)
    }

    pub fn get(&self, omega: &Partition) -> Option<&Ratio<T>> {
        self.entries.iter().find(|(p, _)| p == omega).map(|(_, v)| v)
    }
}

pub fn chern_table<T: IntScalar>(data: &FixedPointData<T>) -> Result<ChernTable<T>> {
    let n = data.complex_dimension();
    let sym = PointSymmetrics::new(data)?;
    let entries = partitions_up_to(n)
        .into_iter()
        .map(|p| {
            let v = sym.sum(&p)?;
            Ok((p, v))
        })
        .collect::<Result<_>>()?;
    Ok(ChernTable { n, entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport<T: IntScalar> {
    /// Every sub-top partition whose localized sum is nonzero, with the value.
    pub violations: Vec<(Partition, Ratio<T>)>,
}

impl<T: IntScalar> VanishingReport<T> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All localized sums of degree `0..n-1` must be zero.
pub fn check_vanishing<T: IntScalar>(data: &FixedPointData<T>) -> Result<VanishingReport<T>> {
    let n = data.complex_dimension();
    let sym = PointSymmetrics::new(data)?;
    let mut violations = Vec::new();
    for p in partitions_up_to(n - 1) {
        let v = sym.sum(&p)?;
        if !num_traits::Zero::is_zero(&v) {
            violations.push((p, v));
        }
    }
    Ok(VanishingReport { violations })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityReport<T: IntScalar> {
    pub table: ChernTable<T>,
    /// Degree-`n` partitions whose Chern number is not an integer.
    pub non_integral: Vec<Partition>,
}

impl<T: IntScalar> IntegralityReport<T> {
    pub fn passed(&self) -> bool {
        self.non_integral.is_empty()
    }
}

pub fn check_integrality<T: IntScalar>(data: &FixedPointData<T>) -> Result<IntegralityReport<T>> {
    let table = chern_table(data)?;
    let non_integral = table
        .chern_numbers()
        .filter(|(_, v)| !v.is_integer())
        .map(|(p, _)| p.clone())
        .collect();
    Ok(IntegralityReport { table, non_integral })
}

/// Cheap integrality-only variant used by the enumerator: no table kept.
pub(crate) fn integral_chern_numbers<T: IntScalar>(data: &FixedPointData<T>) -> Result<bool> {
    let sym = PointSymmetrics::new(data)?;
    for p in partitions(data.complex_dimension()) {
        if !sym.sum(&p)?.is_integer() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `N_i` = number of fixed points with exactly `i` negative weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChiYProfile(pub Vec<usize>);

impl ChiYProfile {
    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

pub fn chi_y_profile<T: IntScalar>(data: &FixedPointData<T>) -> ChiYProfile {
    let mut counts = vec![0; data.complex_dimension() + 1];
    for p in data.points() {
        counts[p.negative_count()] += 1;
    }
    ChiYProfile(counts)
}

/// Symmetry `N_i = N_{n-i}` of the χ_y profile.
pub fn check_kosniowski<T: IntScalar>(data: &FixedPointData<T>) -> bool {
    chi_y_profile(data).is_palindromic()
}

/// An odd number of isolated fixed points forces real dimension `4j`.
pub fn check_parity<T: IntScalar>(data: &FixedPointData<T>) -> bool {
    parity_allows(data.num_points(), data.complex_dimension())
}

pub fn parity_allows(num_points: usize, complex_dimension: usize) -> bool {
    num_points.is_multiple_of(2) || complex_dimension.is_multiple_of(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type D = FixedPointData<i64>;

    fn q(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn remark() -> D {
        D::from_i64(4, &[&[-7, -1, 10, 12], &[-8, 3, 5, 14], &[-8, 3, 5, 14]]).unwrap()
    }

    fn cp2() -> D {
        D::from_i64(2, &[&[1, 2], &[-1, 1], &[-2, -1]]).unwrap()
    }

    #[test]
    fn localization_sum_examples() {
        let t1 = D::from_i64(2, &[&[2, -1], &[-2, 1]]).unwrap();
        assert_eq!(localization_sum(&t1, &Partition::empty()).unwrap(), q(-1, 1));
        assert_eq!(localization_sum(&remark(), &Partition::empty()).unwrap(), q(0, 1));
        assert_eq!(localization_sum(&cp2(), &p(&[1, 1])).unwrap(), q(9, 1));
        assert_eq!(localization_sum(&cp2(), &p(&[2])).unwrap(), q(3, 1));
    }

    #[test]
    fn remark_degree_zero_terms() {
        // 1/840 - 1/1680 - 1/1680
        let pts = remark();
        let terms: Vec<Ratio<i64>> = pts
            .points()
            .iter()
            .map(|pt| {
                let single = D::new(4, vec![pt.weights().to_vec()]).unwrap();
                localization_sum(&single, &Partition::empty()).unwrap()
            })
            .collect();
        assert_eq!(terms, vec![q(1, 840), q(-1, 1680), q(-1, 1680)]);
    }

    #[test]
    fn partition_domain_errors() {
        assert_eq!(
            localization_sum(&cp2(), &p(&[3])),
            Err(Error::PartTooLarge { part: 3, n: 2 })
        );
        assert_eq!(
            localization_sum(&cp2(), &p(&[1, 1, 1])),
            Err(Error::DegreeTooLarge { degree: 3, n: 2 })
        );
    }

    #[test]
    fn vanishing_examples() {
        for a in 1..=5 {
            let s = D::from_i64(1, &[&[a], &[-a]]).unwrap();
            assert!(check_vanishing(&s).unwrap().passed());
        }
        let t1 = D::from_i64(2, &[&[2, -1], &[-2, 1]]).unwrap();
        let r = check_vanishing(&t1).unwrap();
        assert_eq!(r.violations[0], (Partition::empty(), q(-1, 1)));
        assert!(check_vanishing(&remark()).unwrap().passed());
    }

    #[test]
    fn remark_every_degree_two_point_has_e2_minus_49() {
        for pt in remark().points() {
            assert_eq!(elem_sym_all(pt.weights()).unwrap()[2], -49);
        }
    }

    #[test]
    fn integrality_examples() {
        let s = D::from_i64(1, &[&[3], &[-3]]).unwrap();
        let r = check_integrality(&s).unwrap();
        assert!(r.passed());
        assert_eq!(r.table.get(&p(&[1])), Some(&q(2, 1)));

        let r = check_integrality(&remark()).unwrap();
        assert!(r.passed());
        for (part, v) in r.table.chern_numbers() {
            let expected = if part == &p(&[4]) { 3 } else { 0 };
            assert_eq!(*v, q(expected, 1), "c{part}");
        }
        assert_eq!(r.table.chern_numbers().count(), 5);
        assert_eq!(r.table.entries().len(), 12);

        let s6 = D::from_i64(3, &[&[2, -1, -1], &[-2, 1, 1]]).unwrap();
        let r = check_integrality(&s6).unwrap();
        assert!(r.passed());
        assert_eq!(r.table.get(&p(&[3])), Some(&q(2, 1)));
        assert_eq!(r.table.get(&p(&[2, 1])), Some(&q(0, 1)));
        assert_eq!(r.table.get(&p(&[1, 1, 1])), Some(&q(0, 1)));
    }

    #[test]
    fn integrality_failure() {
        let d = D::from_i64(2, &[&[1, 2], &[1, 3]]).unwrap();
        let r = check_integrality(&d).unwrap();
        // c_1^2 = 9/2 + 16/3 = 59/6
        assert_eq!(r.table.get(&p(&[1, 1])), Some(&q(59, 6)));
        assert!(!r.passed());
        assert!(r.non_integral.contains(&p(&[1, 1])));
        assert!(!integral_chern_numbers(&d).unwrap());
    }

    #[test]
    fn chi_y_examples() {
        let s = D::from_i64(1, &[&[1], &[-1]]).unwrap();
        assert_eq!(chi_y_profile(&s), ChiYProfile(vec![1, 1]));
        assert!(check_kosniowski(&s));
        assert_eq!(chi_y_profile(&remark()), ChiYProfile(vec![0, 2, 1, 0, 0]));
        assert!(!check_kosniowski(&remark()));
        assert_eq!(chi_y_profile(&cp2()), ChiYProfile(vec![1, 1, 1]));
        assert!(check_kosniowski(&cp2()));
    }

    #[test]
    fn parity_examples() {
        assert!(parity_allows(3, 4));
        assert!(parity_allows(3, 2));
        assert!(!parity_allows(3, 3));
        assert!(check_parity(&cp2()));
        assert!(check_parity(&remark()));
    }

    #[test]
    fn big_and_fixed_width_agree() {
        let big =
            FixedPointData::<BigInt>::from_i64(4, &[&[-7, -1, 10, 12], &[-8, 3, 5, 14], &[-8, 3, 5, 14]]).unwrap();
        let t = chern_table(&big).unwrap();
        let small = chern_table(&remark()).unwrap();
        for ((pa, va), (pb, vb)) in t.entries().iter().zip(small.entries()) {
            assert_eq!(pa, pb);
            assert_eq!(va.to_string(), vb.to_string());
        }
    }

    // Independent oracle: expand e_k by explicit k-subsets and accumulate
    // the fraction with a plain (num, den) pair.
    fn oracle_sum(points: &[Vec<i64>], n: usize, omega: &[usize]) -> Ratio<i64> {
        fn e(k: usize, w: &[i64]) -> i64 {
            (0u32..(1 << w.len()))
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| {
                    (0..w.len())
                        .filter(|i| m & (1 << i) != 0)
                        .map(|i| w[i])
                        .product::<i64>()
                })
                .sum()
        }
        let (mut num, mut den) = (0i64, 1i64);
        for w in points {
            let a: i64 = omega.iter().map(|&k| e(k, w)).product();
            let b = e(n, w);
            num = num * b + a * den;
            den *= b;
        }
        Ratio::new(num, den)
    }

    fn arb_small() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
        (1usize..=3, 1usize..=3).prop_flat_map(|(n, k)| {
            (
                Just(n),
                prop::collection::vec(prop::collection::vec(prop_oneof![-4i64..=-1, 1i64..=4], n), k),
            )
        })
    }

    proptest! {
        #[test]
        fn brute_force_oracle_agrees((n, pts) in arb_small()) {
            let d = D::new(n, pts.clone()).unwrap();
            for omega in partitions_up_to(n) {
                prop_assert_eq!(
                    localization_sum(&d, &omega).unwrap(),
                    oracle_sum(&pts, n, omega.parts())
                );
            }
        }

        #[test]
        fn top_chern_class_counts_points((n, pts) in arb_small()) {
            let d = D::new(n, pts).unwrap();
            let k = d.num_points() as i64;
            prop_assert_eq!(localization_sum(&d, &p(&[n])).unwrap(), q(k, 1));
        }

        #[test]
        fn negation_invariance((n, pts) in arb_small()) {
            let d = D::new(n, pts).unwrap();
            let neg = d.negated().unwrap();
            let (a, b) = (chern_table(&d).unwrap(), chern_table(&neg).unwrap());
            for ((pa, va), (_, vb)) in a.entries().iter().zip(b.entries()) {
                let sign = if (n - pa.degree()) % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(*va * sign, *vb);
            }
            let mut rev = chi_y_profile(&d).0;
            rev.reverse();
            prop_assert_eq!(chi_y_profile(&neg).0, rev);
            prop_assert_eq!(check_kosniowski(&d), check_kosniowski(&neg));
        }

        #[test]
        fn scaling_covariance((n, pts) in arb_small(), d in 2i64..=3) {
            let data = D::new(n, pts).unwrap();
            let scaled = data.scaled(&d).unwrap();
            for omega in partitions_up_to(n) {
                let base = localization_sum(&data, &omega).unwrap();
                let s = localization_sum(&scaled, &omega).unwrap();
                let factor = Ratio::new(1, d.pow((n - omega.degree()) as u32));
                prop_assert_eq!(s, base * factor);
            }
            prop_assert_eq!(check_vanishing(&data).unwrap().passed(), check_vanishing(&scaled).unwrap().passed());
            prop_assert_eq!(check_integrality(&data).unwrap().passed(), check_integrality(&scaled).unwrap().passed());
        }
    }
}
