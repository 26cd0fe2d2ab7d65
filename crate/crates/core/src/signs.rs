//! Sign rules for graded constructions. Every construction that needs a sign
//! asks this table; nothing else hardcodes one.

/// `(-1)^k`.
pub fn parity_sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Koszul rule for `d(m ⊗ n) = dm ⊗ n + koszul(i) · m ⊗ dn`, `m ∈ M^i`.
pub fn koszul(i: i64) -> i64 {
    parity_sign(i)
}

/// Braiding `M ⊗ N → N ⊗ M`, `m ⊗ n ↦ braiding(i, j) · n ⊗ m`.
pub fn braiding(i: i64, j: i64) -> i64 {
    parity_sign(i * j)
}

/// `d_{C[k]}^n = shift_differential(k) · d_C^{n+k}`.
pub fn shift_differential(k: i64) -> i64 {
    parity_sign(k)
}

/// Action of `a ∈ A^i` on `C[k]`: `a · m = shift_action(i, k) · am`.
pub fn shift_action(i: i64, k: i64) -> i64 {
    parity_sign(i * k)
}

/// `i'_ξ = shift_contraction(k) · i_ξ` on `C[k]`.
pub fn shift_contraction(k: i64) -> i64 {
    parity_sign(k)
}

/// Sign on the `M[1]` diagonal block of the cone differential.
pub const CONE_SOURCE: i64 = -1;

/// `(df) = d_N f + hom_differential(n) · f d_M` for `f ∈ Hom^n`.
pub fn hom_differential(n: i64) -> i64 {
    -parity_sign(n)
}

/// `i(f) = i^N f + hom_contraction(n) · f i^M` for `f ∈ Hom^n`.
pub fn hom_contraction(n: i64) -> i64 {
    -parity_sign(n)
}

/// h-Hom condition `f i = h_hom(n) · i f` for `f ∈ Hom^n`.
pub fn h_hom(n: i64) -> i64 {
    parity_sign(n)
}

/// `i^{M⊗N} = i^M ⊗ 1 + tensor_contraction(p) · 1 ⊗ i^N` on `M^p ⊗ N^q`.
pub fn tensor_contraction(p: i64) -> i64 {
    parity_sign(p)
}

/// Linearity over `A^i` for `f ∈ Hom^n_A`: `f(am) = hom_linearity(n, i) · a f(m)`.
pub fn hom_linearity(n: i64, i: i64) -> i64 {
    parity_sign(n * i)
}

/// Sign of `ξ_i ⊗ (… ξ̂_i …)` in the standard resolution, `i` counted from 1.
pub fn resolution_first(i: usize) -> i64 {
    parity_sign(i as i64 + 1)
}

/// Sign of `([ξ_p, ξ_q] ∧ …)` in both standard complexes, `p, q` from 1.
pub fn bracket_term(p: usize, q: usize) -> i64 {
    parity_sign((p + q) as i64)
}

/// Sign of `(… ξ̂_i …) ⊗ ξ_i v` in the relative standard complex.
pub fn relative_first(i: usize) -> i64 {
    parity_sign(i as i64)
}

/// `i_ξ(u ⊗ λ) = contraction_sign · u ⊗ (ξ ∧ λ)` on the standard resolution.
pub const RESOLUTION_CONTRACTION: i64 = -1;

/// Sign of the permutation sorting `seq` (entries distinct), or 0 on repeats.
pub fn sort_sign(seq: &mut [usize]) -> i64 {
    let mut sign = 1;
    for i in 1..seq.len() {
        let mut j = i;
        while j > 0 && seq[j - 1] > seq[j] {
            seq.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && seq[j - 1] == seq[j] {
            return 0;
        }
    }
    if seq.windows(2).any(|w| w[0] == w[1]) {
        return 0;
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_rules() {
        assert_eq!(koszul(0), 1);
        assert_eq!(koszul(-1), -1);
        assert_eq!(braiding(1, 1), -1);
        assert_eq!(braiding(2, 1), 1);
        assert_eq!(shift_differential(1), -1);
        assert_eq!(shift_differential(-1) * shift_differential(1), 1);
        assert_eq!(shift_action(0, 1), 1);
        assert_eq!(shift_action(1, 1), -1);
        assert_eq!(shift_contraction(1), -1);
        assert_eq!(hom_differential(0), -1);
        assert_eq!(hom_differential(1), 1);
        assert_eq!(tensor_contraction(3), -1);
        assert_eq!(resolution_first(1), 1);
        assert_eq!(relative_first(1), -1);
        assert_eq!(bracket_term(1, 2), -1);
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(sort_sign(&mut [0, 1, 2]), 1);
        assert_eq!(sort_sign(&mut [1, 0, 2]), -1);
        assert_eq!(sort_sign(&mut [2, 0, 1]), 1);
        assert_eq!(sort_sign(&mut [1, 1]), 0);
        let mut s = [2, 1, 0];
        assert_eq!(sort_sign(&mut s), -1);
        assert_eq!(s, [0, 1, 2]);
    }
}
