//! Cubic matrices over two-valued scalars with the bracket
//! [a,b,c]_{ijk} = Σ_{p,q,r} a_{ijp}·b_{qrp}·c_{qrk}.

use semiheaps_core::AlgebraError;

use crate::lazy::LazyTernar;

/// Scalar structure for cubic-matrix entries: the Boolean semiring
/// (or, and) or the field Z_2 (xor, and). The two differ in how the sum
/// over p, q, r combines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicScalars {
    Boolean,
    Mod2,
}

/// Largest side length; N = 3 already means 2^27 elements, far past any
/// dense representation, and N = 4 would overflow the u64 element space.
pub const MAX_CUBIC_SIDE: usize = 3;

#[inline]
fn bit(m: u64, n: usize, i: usize, j: usize, k: usize) -> u64 {
    m >> (i * n * n + j * n + k) & 1
}

/// The N×N×N cubic-matrix semiheap, elements encoded as integers with
/// entry (i,j,k) at bit i·N² + j·N + k. Distinguishes "I" (δ_ijk) and
/// "iota" (δ_ik), the right biunit pair of the motivating example.
pub fn cubic_matrix_semiheap(n: usize, scalars: CubicScalars) -> Result<LazyTernar, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    if n > MAX_CUBIC_SIDE {
        return Err(AlgebraError::CarrierTooLarge {
            n,
            limit: MAX_CUBIC_SIDE,
        });
    }
    let size = 1u64 << (n * n * n);
    let mut lazy = LazyTernar::new(size, move |a, b, c| {
        let mut out = 0u64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = 0u64;
                    'sum: for p in 0..n {
                        if bit(a, n, i, j, p) == 0 {
                            continue;
                        }
                        for q in 0..n {
                            for r in 0..n {
                                let term = bit(b, n, q, r, p) & bit(c, n, q, r, k);
                                match scalars {
                                    CubicScalars::Boolean => {
                                        if term == 1 {
                                            acc = 1;
                                            break 'sum;
                                        }
                                    }
                                    CubicScalars::Mod2 => acc ^= term,
                                }
                            }
                        }
                    }
                    out |= acc << (i * n * n + j * n + k);
                }
            }
        }
        out
    })?;

    let identity_cube = (0..n).fold(0u64, |acc, i| acc | 1 << (i * n * n + i * n + i));
    let iota = {
        let mut m = 0u64;
        for i in 0..n {
            for j in 0..n {
                m |= 1 << (i * n * n + j * n + i);
            }
        }
        m
    };
    lazy.distinguish("I", identity_cube)?;
    lazy.distinguish("iota", iota)?;
    Ok(lazy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use semiheaps_core::Bracket;

    #[test]
    fn one_by_one_cubes_degenerate_to_scalar_conjunction() {
        for scalars in [CubicScalars::Boolean, CubicScalars::Mod2] {
            let t = cubic_matrix_semiheap(1, scalars).unwrap();
            assert_eq!(t.size(), 2);
            for a in 0..2 {
                for b in 0..2 {
                    for c in 0..2 {
                        assert_eq!(t.bracket(a, b, c), a & b & c);
                    }
                }
            }
            assert_eq!(t.element("I"), Some(1));
            assert_eq!(t.element("iota"), Some(1));
        }
    }

    #[test]
    fn distinguished_elements_at_side_two() {
        let t = cubic_matrix_semiheap(2, CubicScalars::Mod2).unwrap();
        assert_eq!(t.size(), 256);
        assert_eq!(t.element("I"), Some(129));
        assert_eq!(t.element("iota"), Some(165));
    }

    #[test]
    fn i_iota_is_a_right_biunit_pair_in_both_orders() {
        for scalars in [CubicScalars::Boolean, CubicScalars::Mod2] {
            let t = cubic_matrix_semiheap(2, scalars).unwrap();
            let i = t.element("I").unwrap();
            let iota = t.element("iota").unwrap();
            for a in 0..256 {
                assert_eq!(t.bracket(a, i, iota), a);
                assert_eq!(t.bracket(a, iota, i), a);
            }
        }
    }

    #[test]
    fn the_left_identities_fail_for_most_elements() {
        let t = cubic_matrix_semiheap(2, CubicScalars::Mod2).unwrap();
        let i = t.element("I").unwrap();
        let iota = t.element("iota").unwrap();
        let failures = (0..256)
            .filter(|&a| t.bracket(i, iota, a) != a || t.bracket(iota, i, a) != a)
            .count();
        assert_eq!(failures, 255);
        assert_eq!(t.bracket(i, iota, 0), 0);
        // the cube supported on entry (0,0,0) survives [I,ι,−] but not the
        // other order: [ι,I,a]_{ijk} = a_{iik} copies the diagonal across j
        assert_eq!(t.bracket(i, iota, 1), 1);
        assert_eq!(t.bracket(iota, i, 1), 0b101);
    }

    #[test]
    fn scalar_choice_changes_the_bracket() {
        let boolean = cubic_matrix_semiheap(2, CubicScalars::Boolean).unwrap();
        let mod2 = cubic_matrix_semiheap(2, CubicScalars::Mod2).unwrap();
        assert!((0..256).any(|a| { boolean.bracket(a, a, a) != mod2.bracket(a, a, a) }));
    }

    #[test]
    fn side_guards() {
        assert!(matches!(
            cubic_matrix_semiheap(0, CubicScalars::Mod2),
            Err(AlgebraError::EmptyCarrier)
        ));
        assert!(matches!(
            cubic_matrix_semiheap(4, CubicScalars::Mod2),
            Err(AlgebraError::CarrierTooLarge { .. })
        ));
        let n3 = cubic_matrix_semiheap(3, CubicScalars::Boolean).unwrap();
        assert_eq!(n3.size(), 1 << 27);
        let i = n3.element("I").unwrap();
        let iota = n3.element("iota").unwrap();
        assert_eq!(n3.bracket(5, i, iota), 5);
    }
}
