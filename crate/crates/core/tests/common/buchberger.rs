//! Textbook Buchberger over Q[x_0..x_m] in lex order (x_0 largest), used
//! as an oracle. Deliberately shares no code with the library beyond the
//! rational type.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use sgb_core::Rational;

/// Terms keyed by exponent; `BTreeMap` order on `Vec<u32>` is lex, so the
/// last key is the leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub BTreeMap<Vec<u32>, Rational>);

impl Poly {
    pub fn new(terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Poly(BTreeMap::new());
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        let entry = self.0.entry(e.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lead(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.0.iter().next_back()
    }

    fn sub_scaled_shifted(&mut self, other: &Poly, c: &Rational, shift: &[u32]) {
        for (e, v) in &other.0 {
            let e: Vec<u32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(e, -(c * v));
        }
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.lead() {
            let inv = c.recip();
            for v in self.0.values_mut() {
                *v *= &inv;
            }
        }
        self
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full reduction of `p` modulo `basis`.
pub fn normal_form(p: &Poly, basis: &[Poly]) -> Poly {
    let mut rest = p.clone();
    let mut out = Poly(BTreeMap::new());
    while let Some((e, c)) = rest.lead().map(|(e, c)| (e.clone(), c.clone())) {
        match basis.iter().find(|g| divides(g.lead().unwrap().0, &e)) {
            Some(g) => {
                let (ge, gc) = g.lead().unwrap();
                let shift = diff(&e, ge);
                rest.sub_scaled_shifted(g, &(&c / gc), &shift);
            }
            None => {
                out.add_term(e.clone(), c.clone());
                rest.0.remove(&e);
            }
        }
    }
    out
}

fn s_poly(f: &Poly, g: &Poly) -> Poly {
    let (fe, fc) = f.lead().unwrap();
    let (ge, gc) = g.lead().unwrap();
    let l = lcm(fe, ge);
    let mut s = Poly(BTreeMap::new());
    s.sub_scaled_shifted(f, &-fc.recip(), &diff(&l, fe));
    s.sub_scaled_shifted(g, &gc.recip(), &diff(&l, ge));
    s
}

/// Reduced lex Gröbner basis, sorted by leading monomial descending.
pub fn groebner(gens: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    // normal strategy: the pair with the smallest lcm (total degree first)
    let key = |basis: &[Poly], (i, j): (usize, usize)| {
        let l = lcm(basis[i].lead().unwrap().0, basis[j].lead().unwrap().0);
        (l.iter().sum::<u32>(), l)
    };
    while !pairs.is_empty() {
        let best = (0..pairs.len()).min_by_key(|&k| key(&basis, pairs[k])).unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (a, b) = (basis[i].lead().unwrap().0, basis[j].lead().unwrap().0);
        // product criterion
        if a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0) {
            continue;
        }
        let r = normal_form(&s_poly(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimalize then inter-reduce
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let e = g.lead().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let he = h.lead().unwrap().0;
            j != i && divides(he, e) && (he != e || j < i)
        });
        if !redundant {
            minimal.push(g.clone().monic());
        }
    }
    let reduced: Vec<Poly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let (e, c) = minimal[i].lead().unwrap();
            let mut tail = minimal[i].clone();
            tail.0.remove(e);
            let mut out = normal_form(&tail, &others);
            out.add_term(e.clone(), c.clone());
            out
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| b.lead().unwrap().0.cmp(a.lead().unwrap().0));
    reduced
}

/// Reduced lex basis of `<gens> : <x_0 ⋯ x_{n-1}>^∞`, computed by adding a
/// new largest variable `t` with `1 - t·x_0⋯x_{n-1}` and eliminating it.
pub fn saturate(gens: &[Poly], n: usize) -> Vec<Poly> {
    let lift = |p: &Poly| Poly::new(p.0.iter().map(|(e, c)| ([vec![0], e.clone()].concat(), c.clone())));
    let mut ext: Vec<Poly> = gens.iter().map(lift).collect();
    ext.push(Poly::new([
        (vec![0; n + 1], Rational::one()),
        (vec![1; n + 1], -Rational::one()),
    ]));
    groebner(&ext)
        .into_iter()
        .filter(|g| g.0.keys().all(|e| e[0] == 0))
        .map(|g| Poly::new(g.0.into_iter().map(|(e, c)| (e[1..].to_vec(), c))))
        .collect()
}
