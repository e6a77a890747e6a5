//! Finitely generated abelian groups given by cyclic factors.
//!
//! A group is an ordered list of cyclic factors `Z/n` (`n >= 2`) or `Z`
//! (stored as `0`). The order is kept as given so that coordinates keep
//! their meaning; [`FiniteAbelianGroup::invariant_factors`] gives the
//! canonical form used for isomorphism tests.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::matrices::{smith_normal_form, IntMatrix};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
    labels: Vec<Option<String>>,
}

/// Coordinates of an element, reduced modulo each finite factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<i64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FiniteAbelianGroup {
    /// Factors must be `0` (a copy of `Z`) or at least 2.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|&&n| n == 1) {
            return domain(format!("cyclic factor of order {bad}"));
        }
        let labels = vec![None; factors.len()];
        Ok(FiniteAbelianGroup { factors, labels })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new(), labels: Vec::new() }
    }

    /// `Z/n`; `n = 1` gives the trivial group and `n = 0` gives `Z`.
    pub fn cyclic(n: u64) -> Self {
        if n == 1 {
            Self::trivial()
        } else {
            FiniteAbelianGroup { factors: vec![n], labels: vec![None] }
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.factors.len() {
            return domain("one label per factor");
        }
        self.labels = labels.into_iter().map(Some).collect();
        Ok(self)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut g = self.clone();
        g.factors.extend_from_slice(&other.factors);
        g.labels.extend(other.labels.iter().cloned());
        g
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        !self.factors.contains(&0)
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigUint> {
        self.is_finite().then(|| self.factors.iter().fold(BigUint::one(), |acc, &n| acc * n))
    }

    /// Invariant factors `d_1 | d_2 | ...` with free factors (`0`) last.
    pub fn invariant_factors(&self) -> Vec<u64> {
        if self.factors.is_empty() {
            return Vec::new();
        }
        let n = self.factors.len();
        let mut entries = vec![0i64; n * n];
        for (i, &f) in self.factors.iter().enumerate() {
            entries[i * n + i] = f as i64;
        }
        let m = IntMatrix::from_i64(n, n, &entries).expect("square");
        diagonal_to_factors(&smith_normal_form(&m).diagonal(), n)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    /// The same group in invariant-factor form, without labels.
    pub fn canonical(&self) -> Self {
        FiniteAbelianGroup::new(self.invariant_factors()).expect("valid factors")
    }

    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.factors.len() {
            return domain(format!("{} coordinates for a group with {} factors", coords.len(), self.factors.len()));
        }
        for (&c, &n) in coords.iter().zip(&self.factors) {
            if n > 0 && (c < 0 || c as u64 >= n) {
                return domain(format!("coordinate {c} outside [0, {n})"));
            }
        }
        Ok(GroupElement { coords: coords.to_vec() })
    }

    /// Element from arbitrary integer coordinates, reduced into range.
    pub fn reduce(&self, coords: &[i64]) -> GroupElement {
        assert_eq!(coords.len(), self.factors.len());
        let coords = coords
            .iter()
            .zip(&self.factors)
            .map(|(&c, &n)| if n == 0 { c } else { c.rem_euclid(n as i64) })
            .collect();
        GroupElement { coords }
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.element(&x.coords).is_ok()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.factors.len()] }
    }

    /// Unit vectors, one per factor.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank())
            .map(|i| {
                let mut c = vec![0; self.rank()];
                c[i] = 1;
                GroupElement { coords: c }
            })
            .collect()
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let sum: Vec<i64> = x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect();
        self.reduce(&sum)
    }

    pub fn scale(&self, x: &GroupElement, k: i64) -> GroupElement {
        let c: Vec<i64> = x.coords.iter().map(|a| a * k).collect();
        self.reduce(&c)
    }

    /// Order of `x`, `None` when infinite.
    pub fn element_order(&self, x: &GroupElement) -> Option<u64> {
        let mut acc = 1u64;
        for (&c, &n) in x.coords.iter().zip(&self.factors) {
            if n == 0 {
                if c != 0 {
                    return None;
                }
                continue;
            }
            let o = n / (c as u64).gcd(&n);
            acc = acc.lcm(&o);
        }
        Some(acc)
    }

    /// All elements of a finite group in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        if !self.is_finite() {
            return domain("cannot enumerate an infinite group");
        }
        let mut out = vec![Vec::new()];
        for &n in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (0..n as i64).map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        Ok(out.into_iter().map(|coords| GroupElement { coords }).collect())
    }

    /// Subgroup generated by `gens`, enumerated by closure under addition.
    pub fn subgroup_elements(&self, gens: &[GroupElement]) -> Result<Vec<GroupElement>> {
        if !self.is_finite() {
            return domain("subgroup closure needs a finite group");
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut frontier = vec![self.identity()];
        seen.insert(self.identity());
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    fn relation_rows(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        self.factors
            .iter()
            .enumerate()
            .filter(|(_, &f)| f > 0)
            .map(|(i, &f)| {
                let mut r = vec![0; n];
                r[i] = f as i64;
                r
            })
            .collect()
    }

    /// `G / <xs>` in invariant-factor form.
    pub fn quotient_by_elements(&self, xs: &[GroupElement]) -> Result<Self> {
        for x in xs {
            if !self.contains(x) {
                return domain(format!("element {x} does not lie in {self}"));
            }
        }
        let mut rows = self.relation_rows();
        rows.extend(xs.iter().map(|x| x.coords.clone()));
        structure_from_relations(self.rank(), &rows)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.factors.iter().map(|&n| cyclic_name(n)).collect();
        f.write_str(&parts.join(" (+) "))
    }
}

pub fn cyclic_name(n: u64) -> String {
    match n {
        0 => "Z".to_string(),
        1 => "0".to_string(),
        n => format!("Z/{n}"),
    }
}

fn diagonal_to_factors(diag: &[BigInt], n_generators: usize) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut free = 0;
    for i in 0..n_generators {
        let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            free += 1;
        } else if !d.is_one() {
            factors.push(d.to_u64().expect("invariant factor fits in u64"));
        }
    }
    factors.extend(std::iter::repeat_n(0, free));
    factors
}

/// `Z^n / <relations>` in invariant-factor form.
pub fn structure_from_relations(n_generators: usize, relations: &[Vec<i64>]) -> Result<FiniteAbelianGroup> {
    if let Some(r) = relations.iter().find(|r| r.len() != n_generators) {
        return domain(format!("relation of length {} for {n_generators} generators", r.len()));
    }
    if n_generators == 0 {
        return Ok(FiniteAbelianGroup::trivial());
    }
    if relations.is_empty() {
        return FiniteAbelianGroup::new(vec![0; n_generators]);
    }
    let flat: Vec<i64> = relations.iter().flatten().copied().collect();
    let m = IntMatrix::from_i64(relations.len(), n_generators, &flat)?;
    FiniteAbelianGroup::new(diagonal_to_factors(&smith_normal_form(&m).diagonal(), n_generators))
}

/// `G / <x>`.
pub fn quotient_by_element(g: &FiniteAbelianGroup, x: &GroupElement) -> Result<FiniteAbelianGroup> {
    g.quotient_by_elements(std::slice::from_ref(x))
}

/// Whether `x` lies in the subgroup generated by `gens`, decided by
/// comparing the orders of `G/<gens>` and `G/<gens, x>`.
pub fn subgroup_contains(g: &FiniteAbelianGroup, gens: &[GroupElement], x: &GroupElement) -> Result<bool> {
    let base = g.quotient_by_elements(gens)?;
    let mut more = gens.to_vec();
    more.push(x.clone());
    Ok(base == g.quotient_by_elements(&more)?)
}

/// Whether `x = 2y` for some `y` in `G`. Decided coordinate-wise: in `Z/m`
/// the equation `2y = c` is solvable iff `gcd(2, m)` divides `c`.
pub fn is_divisible_by_2(g: &FiniteAbelianGroup, x: &GroupElement) -> Result<bool> {
    if !g.contains(x) {
        return domain(format!("element {x} does not lie in {g}"));
    }
    Ok(x.coords.iter().zip(&g.factors).all(|(&c, &n)| {
        let gcd = if n == 0 { 2 } else { 2u64.gcd(&n) as i64 };
        c % gcd == 0
    }))
}

/// A word in named generators: `(generator, exponent)` letters.
pub type NamedWord = Vec<(String, i64)>;

/// Parses words like `a^4 b^-6`: letters separated by whitespace or `*`,
/// each `name` or `name^k`.
pub fn parse_named_word(s: &str) -> Result<NamedWord> {
    s.split(|c: char| c.is_whitespace() || c == '*')
        .filter(|t| !t.is_empty())
        .map(|t| match t.split_once('^') {
            None => Ok((t.to_string(), 1)),
            Some((g, e)) => e
                .parse::<i64>()
                .map(|e| (g.to_string(), e))
                .map_err(|_| Error::Domain(format!("bad exponent in {t:?}"))),
        })
        .collect()
}

/// Abelianization of `<generators | relators>` via exponent-sum vectors.
pub fn abelianize_presentation(generators: &[String], relators: &[NamedWord]) -> Result<FiniteAbelianGroup> {
    let index: BTreeMap<&str, usize> = generators.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
    if index.len() != generators.len() {
        return domain("duplicate generator name");
    }
    let mut rows = Vec::with_capacity(relators.len());
    for word in relators {
        let mut v = vec![0i64; generators.len()];
        for (g, e) in word {
            let i = *index.get(g.as_str()).ok_or_else(|| Error::Domain(format!("undeclared generator {g:?}")))?;
            v[i] += e;
        }
        rows.push(v);
    }
    structure_from_relations(generators.len(), &rows)
}

/// `SL_2(Z) ≅ Z/4 *_{Z/2} Z/6` as `<a, b | a^4, b^6, a^2 b^-3>`.
pub fn sl2_amalgam_presentation() -> (Vec<String>, Vec<NamedWord>) {
    let gens = vec!["a".to_string(), "b".to_string()];
    let rels = ["a^4", "b^6", "a^2 b^-3"].iter().map(|w| parse_named_word(w).expect("static word")).collect();
    (gens, rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(f: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(f.to_vec()).unwrap()
    }

    // Brute force: cosets of <x> by explicit enumeration.
    fn brute_quotient_order(grp: &FiniteAbelianGroup, x: &GroupElement) -> usize {
        let sub = grp.subgroup_elements(std::slice::from_ref(x)).unwrap();
        grp.elements().unwrap().len() / sub.len()
    }

    fn brute_divisible(grp: &FiniteAbelianGroup, x: &GroupElement) -> bool {
        grp.elements().unwrap().iter().any(|y| grp.scale(y, 2) == *x)
    }

    #[test]
    fn structure_examples() {
        assert_eq!(structure_from_relations(1, &[]).unwrap(), g(&[0]));
        assert_eq!(structure_from_relations(2, &[vec![2, 0], vec![0, 3]]).unwrap(), g(&[6]));
        assert_eq!(structure_from_relations(2, &[vec![1, 1]]).unwrap(), g(&[0]));
        assert!(structure_from_relations(2, &[vec![1]]).is_err());
    }

    #[test]
    fn quotient_examples() {
        let z4 = g(&[4]);
        assert_eq!(quotient_by_element(&z4, &z4.element(&[2]).unwrap()).unwrap(), g(&[2]));
        let v4 = g(&[2, 2]);
        assert_eq!(quotient_by_element(&v4, &v4.element(&[1, 1]).unwrap()).unwrap(), g(&[2]));
        let z28 = g(&[28]);
        let x = z28.element(&[14]).unwrap();
        assert_eq!(quotient_by_element(&z28, &x).unwrap(), g(&[14]));
        assert_eq!(brute_quotient_order(&z28, &x), 14);
        assert!(z28.element(&[28]).is_err());
    }

    #[test]
    fn divisibility_examples() {
        let z2 = g(&[2]);
        assert!(!is_divisible_by_2(&z2, &z2.element(&[1]).unwrap()).unwrap());
        let z4 = g(&[4]);
        assert!(is_divisible_by_2(&z4, &z4.element(&[2]).unwrap()).unwrap());
        let h = g(&[2, 4]);
        let x = h.element(&[1, 2]).unwrap();
        assert!(!is_divisible_by_2(&h, &x).unwrap());
        assert!(!brute_divisible(&h, &x));
    }

    #[test]
    fn abelianization_examples() {
        let (gens, rels) = sl2_amalgam_presentation();
        assert_eq!(abelianize_presentation(&gens, &rels).unwrap(), g(&[12]));
        let a = vec!["a".to_string()];
        assert_eq!(abelianize_presentation(&a, &[]).unwrap(), g(&[0]));
        let bad = vec![parse_named_word("c^2").unwrap()];
        assert!(abelianize_presentation(&a, &bad).is_err());
        // Without the torsion relator b^6 the exponent matrix is singular.
        let loose = ["a^4 b^-6", "a^2 b^-3"].map(|w| parse_named_word(w).unwrap());
        assert_eq!(abelianize_presentation(&gens, &loose).unwrap(), g(&[0]));
    }

    #[test]
    fn rendering_and_canonical_form() {
        assert_eq!(g(&[2, 8128]).to_string(), "Z/2 (+) Z/8128");
        assert_eq!(g(&[28]).to_string(), "Z/28");
        assert_eq!(g(&[0]).to_string(), "Z");
        assert_eq!(FiniteAbelianGroup::trivial().to_string(), "0");
        assert_eq!(g(&[2, 3]).invariant_factors(), vec![6]);
        assert_eq!(g(&[0, 4, 6]).invariant_factors(), vec![2, 12, 0]);
        assert!(g(&[8, 2]).is_isomorphic(&g(&[2, 8])));
        assert!(!g(&[4]).is_isomorphic(&g(&[2, 2])));
        assert!(FiniteAbelianGroup::new(vec![1]).is_err());
    }

    fn finite_group(max_order: u64) -> impl Strategy<Value = FiniteAbelianGroup> {
        prop::collection::vec(2u64..=12, 0..=4)
            .prop_filter("bounded order", move |f| f.iter().product::<u64>() <= max_order)
            .prop_map(|f| FiniteAbelianGroup::new(f).unwrap())
    }

    proptest! {
        #[test]
        fn quotient_order_bookkeeping(grp in finite_group(64), seed in prop::collection::vec(0i64..1000, 4)) {
            let x = grp.reduce(&seed[..grp.rank()]);
            let q = quotient_by_element(&grp, &x).unwrap();
            let order_x = grp.element_order(&x).unwrap();
            prop_assert_eq!(q.order().unwrap() * order_x, grp.order().unwrap());
            prop_assert_eq!(q.order().unwrap(), BigUint::from(brute_quotient_order(&grp, &x)));
            prop_assert!(quotient_by_element(&grp, &grp.identity()).unwrap().is_isomorphic(&grp));
        }

        #[test]
        fn subgroup_membership_matches_closure(grp in finite_group(64), seeds in prop::collection::vec(prop::collection::vec(0i64..100, 4), 0..3), probe in prop::collection::vec(0i64..100, 4)) {
            let gens: Vec<GroupElement> = seeds.iter().map(|s| grp.reduce(&s[..grp.rank()])).collect();
            let x = grp.reduce(&probe[..grp.rank()]);
            let closure = grp.subgroup_elements(&gens).unwrap();
            prop_assert_eq!(subgroup_contains(&grp, &gens, &x).unwrap(), closure.contains(&x));
        }

        #[test]
        fn divisibility_matches_brute_force(grp in finite_group(256)) {
            for x in grp.elements().unwrap() {
                prop_assert_eq!(is_divisible_by_2(&grp, &x).unwrap(), brute_divisible(&grp, &x));
            }
        }

        #[test]
        fn invariant_factor_form(n in 1usize..=4, rels in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 0..=4)) {
            let rels: Vec<Vec<i64>> = rels.into_iter().map(|r| r[..n].to_vec()).collect();
            let grp = structure_from_relations(n, &rels).unwrap();
            let f = grp.factors();
            for w in f.windows(2) {
                if w[0] != 0 && w[1] != 0 {
                    prop_assert_eq!(w[1] % w[0], 0);
                }
                prop_assert!(!(w[0] == 0 && w[1] != 0), "free factors last");
            }
        }
    }
}
