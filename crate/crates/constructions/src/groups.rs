//! Small reference groups and monoids used as building blocks.

use semiheaps_core::{AlgebraError, BinaryTable, Endomap};

/// The cyclic group Z_n under addition.
pub fn cyclic_group(n: usize) -> Result<BinaryTable, AlgebraError> {
    BinaryTable::from_fn(n, |a, b| (a + b) % n)
}

/// Z_2 × Z_2 on {0,1,2,3}, encoded so the group law is bitwise xor.
pub fn klein_group() -> BinaryTable {
    BinaryTable::from_fn(4, |a, b| a ^ b).expect("fixed carrier")
}

const S3_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// The symmetric group on three letters; element i is the permutation
/// S3_PERMS[i], composed left-to-right as (f·g)(x) = g(f(x)).
pub fn symmetric_group_3() -> BinaryTable {
    BinaryTable::from_fn(6, |a, b| {
        let composed = [0, 1, 2].map(|x| S3_PERMS[b][S3_PERMS[a][x]]);
        S3_PERMS
            .iter()
            .position(|p| *p == composed)
            .expect("composition of permutations is a permutation")
    })
    .expect("fixed carrier")
}

/// k×k matrices over the Boolean semiring under matrix product, encoded as
/// integers with bit (i,j) at position i·k + j.
pub fn boolean_matrix_monoid(k: usize) -> Result<BinaryTable, AlgebraError> {
    if k == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    let bits = k * k;
    if bits > 4 {
        return Err(AlgebraError::CarrierTooLarge {
            n: 1usize << bits,
            limit: 16,
        });
    }
    let n = 1usize << bits;
    let entry = |m: usize, i: usize, j: usize| (m >> (i * k + j)) & 1;
    BinaryTable::from_fn(n, |a, b| {
        let mut product = 0usize;
        for i in 0..k {
            for j in 0..k {
                if (0..k).any(|p| entry(a, i, p) == 1 && entry(b, p, j) == 1) {
                    product |= 1 << (i * k + j);
                }
            }
        }
        product
    })
}

/// Matrix transpose on the same encoding, an antihomomorphic involution of
/// the Boolean matrix monoid.
pub fn boolean_matrix_transpose(k: usize) -> Result<Endomap, AlgebraError> {
    if k == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    let bits = k * k;
    if bits > 4 {
        return Err(AlgebraError::CarrierTooLarge {
            n: 1usize << bits,
            limit: 16,
        });
    }
    let n = 1usize << bits;
    let image = (0..n)
        .map(|m| {
            let mut t = 0usize;
            for i in 0..k {
                for j in 0..k {
                    if (m >> (i * k + j)) & 1 == 1 {
                        t |= 1 << (j * k + i);
                    }
                }
            }
            t
        })
        .collect();
    Endomap::new(n, image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use semiheaps_core::{check_group, check_monoid, is_associative};

    #[test]
    fn reference_groups_pass_the_group_laws() {
        assert!(check_group(&cyclic_group(5).unwrap(), 1).holds());
        assert!(check_group(&klein_group(), 1).holds());
        let s3 = symmetric_group_3();
        assert!(check_group(&s3, 1).holds());
        assert_eq!(s3.identity(), Some(0));
        // transpositions are their own inverses, 3-cycles are not
        assert_eq!(s3.op(1, 1), 0);
        assert_eq!(s3.op(3, 4), 0);
        assert_ne!(s3.op(3, 3), 0);
    }

    #[test]
    fn s3_is_not_commutative() {
        let s3 = symmetric_group_3();
        assert!((0..6).any(|a| (0..6).any(|b| s3.op(a, b) != s3.op(b, a))));
    }

    #[test]
    fn boolean_matrices_form_a_monoid_with_transpose_antihomomorphism() {
        let m = boolean_matrix_monoid(2).unwrap();
        assert_eq!(m.entries().len(), 256);
        assert!(is_associative(&m));
        assert!(check_monoid(&m, 1).holds());
        // identity matrix has bits (0,0) and (1,1): 1 + 8
        assert_eq!(m.identity(), Some(9));

        let t = boolean_matrix_transpose(2).unwrap();
        assert!(t.is_involution());
        for a in 0..16 {
            for b in 0..16 {
                assert_eq!(t.apply(m.op(a, b)), m.op(t.apply(b), t.apply(a)));
            }
        }
    }

    #[test]
    fn one_by_one_matrices_are_boolean_and() {
        let m = boolean_matrix_monoid(1).unwrap();
        assert_eq!(m.entries(), &[0, 0, 0, 1]);
        assert!(boolean_matrix_transpose(1).unwrap().is_identity());
    }

    #[test]
    fn oversized_matrix_carriers_are_rejected() {
        assert!(matches!(
            boolean_matrix_monoid(3),
            Err(AlgebraError::CarrierTooLarge { .. })
        ));
        assert_eq!(boolean_matrix_monoid(0), Err(AlgebraError::EmptyCarrier));
    }
}
