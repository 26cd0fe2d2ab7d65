//! PBW basis of `U(g)`: sorted words in the declared basis order, stored as
//! nondecreasing index sequences.

use std::collections::HashMap;

use crate::lie::LieAlgebra;
use crate::scalar::Field;

pub type Monomial = Vec<usize>;

/// Linear combination of PBW monomials.
pub type Element<F> = Vec<(Monomial, F)>;

/// Multiplication in `U(g)` with memoized straightening.
pub struct Pbw<'a, F> {
    g: &'a LieAlgebra<F>,
    right: HashMap<(Monomial, usize), Element<F>>,
}

fn accumulate<F: Field>(acc: &mut HashMap<Monomial, F>, mono: Monomial, c: F) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&mono) {
        Some(x) => {
            x.add_assign_ref(&c);
            if x.is_zero() {
                acc.remove(&mono);
            }
        }
        None => {
            acc.insert(mono, c);
        }
    }
}

fn finish<F: Field>(acc: HashMap<Monomial, F>) -> Element<F> {
    let mut v: Element<F> = acc.into_iter().collect();
    v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    v
}

impl<'a, F: Field> Pbw<'a, F> {
    pub fn new(g: &'a LieAlgebra<F>) -> Self {
        Self { g, right: HashMap::new() }
    }

    /// `u · x_j`.
    pub fn mul_right(&mut self, u: &[usize], j: usize) -> Element<F> {
        match u.last() {
            None => return vec![(vec![j], F::one())],
            Some(&l) if l <= j => {
                let mut w = u.to_vec();
                w.push(j);
                return vec![(w, F::one())];
            }
            _ => {}
        }
        let key = (u.to_vec(), j);
        if let Some(v) = self.right.get(&key) {
            return v.clone();
        }
        // u = u' x_l with l > j: u' x_l x_j = (u' x_j) x_l + u' [x_l, x_j].
        let (prefix, l) = (&u[..u.len() - 1], u[u.len() - 1]);
        let mut acc = HashMap::new();
        for (v, c) in self.mul_right(prefix, j) {
            for (w, d) in self.mul_right(&v, l) {
                accumulate(&mut acc, w, c.mul_ref(&d));
            }
        }
        let bracket = self.g.bracket_basis(l, j);
        for (k, c) in bracket.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (w, d) in self.mul_right(prefix, k) {
                accumulate(&mut acc, w, c.mul_ref(&d));
            }
        }
        let out = finish(acc);
        self.right.insert(key, out.clone());
        out
    }

    /// `u · v` for monomials.
    pub fn mul(&mut self, u: &[usize], v: &[usize]) -> Element<F> {
        let mut cur: Element<F> = vec![(u.to_vec(), F::one())];
        for &j in v {
            let mut acc = HashMap::new();
            for (w, c) in &cur {
                for (x, d) in self.mul_right(w, j) {
                    accumulate(&mut acc, x, c.mul_ref(&d));
                }
            }
            cur = finish(acc);
        }
        cur
    }

    /// `x_j · u`.
    pub fn mul_left(&mut self, j: usize, u: &[usize]) -> Element<F> {
        self.mul(&[j], u)
    }
}

/// All nondecreasing words of length `deg` over `dim` letters.
pub fn monomials_of_degree(dim: usize, deg: usize) -> Vec<Monomial> {
    fn rec(dim: usize, deg: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if cur.len() == deg {
            out.push(cur.clone());
            return;
        }
        for j in start..dim {
            cur.push(j);
            rec(dim, deg, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, deg, 0, &mut Vec::new(), &mut out);
    out
}

/// Strictly increasing subsets of size `k`.
pub fn wedge_basis(dim: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(dim: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..dim {
            cur.push(j);
            rec(dim, k, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, k, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Qi;

    fn sl2() -> LieAlgebra<Qi> {
        let q = Qi::from_i64;
        LieAlgebra::new(
            vec!["e".into(), "h".into(), "f".into()],
            [(1, 0, 0, q(2)), (1, 2, 2, q(-2)), (0, 2, 1, q(1))],
        )
        .unwrap()
    }

    #[test]
    fn straightening_in_sl2() {
        let g = sl2();
        let mut u = Pbw::new(&g);
        // f · e = e f − h
        let fe = u.mul(&[2], &[0]);
        assert_eq!(fe, vec![(vec![1], Qi::from_i64(-1)), (vec![0, 2], Qi::from_i64(1))]);
        // h · e = e h + 2 e
        let he = u.mul(&[1], &[0]);
        assert_eq!(he, vec![(vec![0], Qi::from_i64(2)), (vec![0, 1], Qi::from_i64(1))]);
    }

    #[test]
    fn associativity_on_words() {
        let g = sl2();
        let mut u = Pbw::new(&g);
        let words = [vec![2, 2], vec![1, 2], vec![0], vec![0, 1, 2]];
        for a in &words {
            for b in &words {
                for c in &words {
                    // (a b) c = a (b c), both expanded via mul.
                    let ab = u.mul(a, b);
                    let mut left: HashMap<Monomial, Qi> = HashMap::new();
                    for (w, x) in ab {
                        for (v, y) in u.mul(&w, c) {
                            accumulate(&mut left, v, x.mul_ref(&y));
                        }
                    }
                    let bc = u.mul(b, c);
                    let mut right: HashMap<Monomial, Qi> = HashMap::new();
                    for (w, x) in bc {
                        for (v, y) in u.mul(a, &w) {
                            accumulate(&mut right, v, x.mul_ref(&y));
                        }
                    }
                    assert_eq!(finish(left), finish(right));
                }
            }
        }
    }

    #[test]
    fn basis_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(wedge_basis(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }
}
