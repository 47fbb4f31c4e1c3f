//! The embedding `i: G2 -> so(7)`, the Cartan-dual maps `pr` and `iota`, and
//! parabolic subalgebras given by crossed simple roots.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::lie::{
    build_g2_root_data, AlgebraElement, BasisKind, Coefficient, RootSystemData, SoOdd, StructureTable, WeightBasis,
    WeightVec,
};
use crate::linalg::{Subspace, Matrix};
use crate::scalar::{int, ParamScalar, Rational};

/// The image of `G2` inside `so(7)` together with the induced `G2` table.
#[derive(Clone, Debug)]
pub struct EmbeddedSubalgebra {
    table: StructureTable,
    roots: RootSystemData,
    images: Vec<AlgebraElement>,
    closure_dim: usize,
}

fn closure(table: &StructureTable, gens: &[AlgebraElement]) -> Subspace {
    let dim = table.dim();
    let mut basis: Vec<AlgebraElement> = Vec::new();
    let mut span = Subspace::new(dim, Vec::new());
    let push = |e: AlgebraElement, basis: &mut Vec<AlgebraElement>, span: &mut Subspace| {
        if !e.is_zero() && !span.contains(e.coeffs()) {
            basis.push(e);
            *span = Subspace::new(dim, basis.iter().map(|b| b.coeffs().to_vec()).collect());
        }
    };
    for g in gens {
        push(g.clone(), &mut basis, &mut span);
    }
    let mut done = 0;
    // bracket every new element with everything found so far until the span stops growing
    while done < basis.len() {
        let upto = basis.len();
        for i in done..upto {
            for j in 0..upto {
                let b = table.bracket(&basis[i], &basis[j]);
                push(b, &mut basis, &mut span);
            }
        }
        done = upto;
    }
    span
}

/// Builds the image of `G2` from `i(g'_{±2}) = g_{±2}`, `i(g'_{±1}) = g_{±1} + g_{±3}`.
///
/// Non-simple root vectors are `g'_b = [g'_{a_i}, g'_{b - a_i}]` for the first
/// simple root `a_i` with `b - a_i` a root (and likewise for negative roots);
/// `h'_1 = [g'_1, g'_-1]` and `h'_2 = 3 [g'_2, g'_-2]`.
pub fn embed_g2(so7: &SoOdd) -> Result<EmbeddedSubalgebra, Error> {
    let t = so7.table();
    if so7.n() != 3 {
        return Err(Error::Invalid("the G2 embedding lives in so(7)".into()));
    }
    let g = |l: i64| t.root_element(l).expect("so(7) root label");
    let gens = [&g(1) + &g(3), &g(-1) + &g(-3), g(2), g(-2)];
    let span = closure(t, &gens);
    let closure_dim = span.dim();
    if closure_dim != 14 {
        return Err(Error::Verification(alloc::format!(
            "generator closure has dimension {closure_dim}, expected 14"
        )));
    }

    let roots = build_g2_root_data();
    let pos = roots.positive_roots().to_vec();
    let m = pos.len();
    let mut plus: Vec<AlgebraElement> = vec![gens[0].clone(), gens[2].clone()];
    let mut minus: Vec<AlgebraElement> = vec![gens[1].clone(), gens[3].clone()];
    for beta in pos.iter().skip(2) {
        let (i, rest) = (0..2)
            .find_map(|i| {
                let mut r = beta.clone();
                r[i] -= 1;
                roots.label_of(&r).filter(|l| *l > 0).map(|l| (i, l as usize - 1))
            })
            .expect("every non-simple positive root has a simple predecessor");
        plus.push(t.bracket(&plus[i], &plus[rest]));
        minus.push(t.bracket(&minus[i], &minus[rest]));
    }
    let h1 = t.bracket(&plus[0], &minus[0]);
    let h2 = t.bracket(&plus[1], &minus[1]).scale(&int(3));

    let mut labels: Vec<String> = Vec::new();
    let mut kinds = Vec::new();
    let mut rcoords = Vec::new();
    let mut images = Vec::new();
    for (k, e) in plus.iter().enumerate() {
        labels.push(alloc::format!("g'_{}", k + 1));
        kinds.push(BasisKind::Root(k as i64 + 1));
        rcoords.push(pos[k].clone());
        images.push(e.clone());
    }
    for (i, h) in [h1, h2].into_iter().enumerate() {
        labels.push(alloc::format!("h'_{}", i + 1));
        kinds.push(BasisKind::Cartan(i + 1));
        rcoords.push(vec![0, 0]);
        images.push(h);
    }
    for (k, e) in minus.iter().enumerate() {
        labels.push(alloc::format!("g'_-{}", k + 1));
        kinds.push(BasisKind::Root(-(k as i64) - 1));
        rcoords.push(pos[k].iter().map(|x| -x).collect());
        images.push(e.clone());
    }
    debug_assert_eq!(images.len(), 2 * m + 2);
    for e in &images {
        if !span.contains(e.coeffs()) {
            return Err(Error::Verification("G2 basis element outside the closure".into()));
        }
    }
    let vectors: Vec<Vec<Rational>> = images.iter().map(|e| e.coeffs().to_vec()).collect();
    let table = StructureTable::from_realization(
        "G2",
        labels,
        kinds,
        rcoords,
        roots.gram().to_vec(),
        &vectors,
        |a, b| {
            t.bracket(&AlgebraElement::from_coeffs(a.to_vec()), &AlgebraElement::from_coeffs(b.to_vec()))
                .coeffs()
                .to_vec()
        },
    )?;
    Ok(EmbeddedSubalgebra {
        table,
        roots,
        images,
        closure_dim,
    })
}

impl EmbeddedSubalgebra {
    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn root_data(&self) -> &RootSystemData {
        &self.roots
    }

    pub fn closure_dim(&self) -> usize {
        self.closure_dim
    }

    /// `i(e_k)` for the `k`-th `G2` basis element.
    pub fn image_of_basis(&self, k: usize) -> &AlgebraElement {
        &self.images[k]
    }

    /// `i(x)` in `so(7)` coordinates.
    pub fn embed(&self, x: &AlgebraElement) -> AlgebraElement {
        let dim = self.images[0].dim();
        let mut out = AlgebraElement::zero(dim);
        for (k, c) in x.support() {
            out = &out + &self.images[k].scale(c);
        }
        out
    }

    /// `i(g'_label)`.
    pub fn root_image(&self, label: i64) -> Result<AlgebraElement, Error> {
        Ok(self.embed(&self.table.root_element(label)?))
    }

    /// `i(h'_i)` (1-based).
    pub fn cartan_image(&self, i: usize) -> AlgebraElement {
        self.images[self.table.cartan(i)].clone()
    }

    /// The span of the image.
    pub fn image_space(&self) -> Subspace {
        let dim = self.images[0].dim();
        Subspace::new(dim, self.images.iter().map(|e| e.coeffs().to_vec()).collect())
    }

    /// `i([a, b]) = [i(a), i(b)]` on every pair of basis elements.
    pub fn check_homomorphism(&self, so7: &SoOdd) -> Result<(), Error> {
        let n = self.table.dim();
        for a in 0..n {
            for b in 0..n {
                let lhs = self.embed(&self.table.bracket(&self.table.basis_element(a), &self.table.basis_element(b)));
                let rhs = so7.table().bracket(&self.images[a], &self.images[b]);
                if lhs != rhs {
                    return Err(Error::Verification(alloc::format!(
                        "i is not a homomorphism on ({}, {})",
                        self.table.label(a),
                        self.table.label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Restriction of an `so(7)` Cartan weight to the image of the `G2` Cartan,
    /// read off from the matrices of `i(h'_1)`, `i(h'_2)`, returned in the
    /// `alpha` basis (using `w(h'_i) = <w, alpha_i>`).
    pub fn restrict_weight(&self, so7: &SoOdd, w: &WeightVec<ParamScalar>) -> Result<WeightVec<ParamScalar>, Error> {
        let w = w.to(WeightBasis::Eps)?;
        let values: Vec<ParamScalar> = (1..=2)
            .map(|i| {
                let eps = so7.eps_values(&self.cartan_image(i));
                w.coords()
                    .iter()
                    .zip(&eps)
                    .fold(ParamScalar::zero(), |acc, (c, e)| &acc + &c.scale(e))
            })
            .collect();
        // solve gram * mu = values
        let g = self.roots.gram();
        let det = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0];
        let inv = [
            [&g[1][1] / &det, -&g[0][1] / &det],
            [-&g[1][0] / &det, &g[0][0] / &det],
        ];
        let mu = (0..2)
            .map(|i| &values[0].scale(&inv[i][0]) + &values[1].scale(&inv[i][1]))
            .collect();
        Ok(WeightVec::new(WeightBasis::Alpha, mu))
    }
}

/// `pr`: `eta_1, eta_3 -> alpha_1`, `eta_2 -> alpha_2`, extended linearly.
pub fn project_weight<S: Coefficient>(w: &WeightVec<S>) -> Result<WeightVec<S>, Error> {
    let eta = w.to(WeightBasis::Eta)?;
    if eta.rank() != 3 {
        return Err(Error::Invalid("pr is defined on so(7) weights".into()));
    }
    let c = eta.coords();
    Ok(WeightVec::new(WeightBasis::Alpha, vec![c[0].add(&c[2]), c[1].clone()]))
}

/// `iota`: `alpha_1 -> eps_1 - eps_2 + 2 eps_3`, `alpha_2 -> 3 eps_2 - 3 eps_3`.
pub fn inject_weight<S: Coefficient>(w: &WeightVec<S>) -> Result<WeightVec<S>, Error> {
    let a = w.to(WeightBasis::Alpha)?;
    let c = a.coords();
    let m: Matrix = vec![vec![int(1), int(-1), int(2)], vec![int(0), int(3), int(-3)]];
    let out = (0..3)
        .map(|j| c[0].scale(&m[0][j]).add(&c[1].scale(&m[1][j])))
        .collect();
    Ok(WeightVec::new(WeightBasis::Eps, out))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum AlgebraTag {
    So7,
    G2,
}

/// A standard parabolic subalgebra given by its crossed simple roots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParabolicSelection {
    pub algebra: AlgebraTag,
    pub mask: Vec<u8>,
    /// Cartan plus root spaces with no crossed support.
    pub levi: Vec<usize>,
    /// Positive root spaces with crossed support.
    pub nilradical: Vec<usize>,
    /// Negatives of the nilradical.
    pub opposite: Vec<usize>,
}

/// Standard parabolic of `table` with the given mask (1 = crossed).
pub fn parabolic(table: &StructureTable, algebra: AlgebraTag, mask: &[u8]) -> Result<ParabolicSelection, Error> {
    if mask.len() != table.rank() || mask.iter().any(|&m| m > 1) {
        return Err(Error::Invalid(alloc::format!(
            "mask must have {} entries in {{0,1}}",
            table.rank()
        )));
    }
    let mut levi = Vec::new();
    let mut nilradical = Vec::new();
    let mut opposite = Vec::new();
    for i in 0..table.dim() {
        match table.kind(i) {
            BasisKind::Cartan(_) => levi.push(i),
            BasisKind::Root(l) => {
                let crossed = table.root(i).iter().zip(mask).any(|(c, &m)| m == 1 && *c != 0);
                match (crossed, l > 0) {
                    (false, _) => levi.push(i),
                    (true, true) => nilradical.push(i),
                    (true, false) => opposite.push(i),
                }
            }
        }
    }
    Ok(ParabolicSelection {
        algebra,
        mask: mask.to_vec(),
        levi,
        nilradical,
        opposite,
    })
}

impl ParabolicSelection {
    pub fn name(&self) -> String {
        let m: Vec<String> = self.mask.iter().map(|x| alloc::format!("{x}")).collect();
        match self.algebra {
            AlgebraTag::So7 => alloc::format!("p({})", m.join(",")),
            AlgebraTag::G2 => alloc::format!("p'({})", m.join(",")),
        }
    }

    /// Basis indices of `levi + nilradical`, ascending.
    pub fn members(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.levi.iter().chain(&self.nilradical).copied().collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, i: usize) -> bool {
        self.levi.contains(&i) || self.nilradical.contains(&i)
    }

    /// `levi + nilradical` is closed under brackets.
    pub fn is_subalgebra(&self, table: &StructureTable) -> bool {
        let mem = self.members();
        mem.iter()
            .all(|&a| mem.iter().all(|&b| table.bracket_basis(a, b).iter().all(|(k, _)| self.contains(*k))))
    }

    pub fn opposite_is_commutative(&self, table: &StructureTable) -> bool {
        self.opposite
            .iter()
            .all(|&a| self.opposite.iter().all(|&b| table.bracket_basis(a, b).is_empty()))
    }

    /// Labels of the opposite nilradical.
    pub fn opposite_labels<'a>(&self, table: &'a StructureTable) -> Vec<&'a str> {
        self.opposite.iter().map(|&i| table.label(i)).collect()
    }

    fn span(&self, dim: usize) -> Vec<Vec<Rational>> {
        self.members()
            .into_iter()
            .map(|i| {
                let mut v = vec![<Rational as Zero>::zero(); dim];
                v[i] = int(1);
                v
            })
            .collect()
    }
}

/// Every mask of the given length, in lexicographic order.
pub fn all_masks(rank: usize) -> Vec<Vec<u8>> {
    (0..1u32 << rank)
        .map(|bits| (0..rank).map(|i| ((bits >> (rank - 1 - i)) & 1) as u8).collect())
        .collect()
}

/// `i^{-1}(i(g') ∩ p)`, identified with a standard `G2` parabolic.
pub fn intersect_parabolic(
    so7: &SoOdd,
    emb: &EmbeddedSubalgebra,
    p: &ParabolicSelection,
) -> Result<ParabolicSelection, Error> {
    if p.algebra != AlgebraTag::So7 {
        return Err(Error::Invalid("expected an so(7) parabolic".into()));
    }
    let dim = so7.table().dim();
    let image = emb.image_space();
    let inter = Subspace::new(dim, p.span(dim)).intersection(&image);
    let gdim = emb.table().dim();
    let pulled: Vec<Vec<Rational>> = inter
        .generators()
        .iter()
        .map(|v| image.coordinates(v).expect("intersection lies in the image"))
        .collect();
    let pulled = Subspace::new(gdim, pulled);
    for mask in all_masks(2) {
        let q = parabolic(emb.table(), AlgebraTag::G2, &mask)?;
        if Subspace::new(gdim, q.span(gdim)).same_as(&pulled) {
            return Ok(q);
        }
    }
    Err(Error::Verification(alloc::format!(
        "i^-1(i(g') ∩ {}) is not a standard parabolic",
        p.name()
    )))
}

/// Covering relations of the inclusion order on all `so(7)` and `G2`
/// parabolics, the latter embedded through `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionLattice {
    pub nodes: Vec<ParabolicSelection>,
    /// `(smaller, larger)` index pairs into `nodes`, sorted.
    pub arrows: Vec<(usize, usize)>,
}

impl InclusionLattice {
    pub fn arrow_names(&self) -> Vec<(String, String)> {
        self.arrows
            .iter()
            .map(|&(a, b)| (self.nodes[a].name(), self.nodes[b].name()))
            .collect()
    }
}

pub fn inclusion_lattice(so7: &SoOdd, emb: &EmbeddedSubalgebra) -> Result<InclusionLattice, Error> {
    let dim = so7.table().dim();
    let mut nodes = Vec::new();
    let mut spaces = Vec::new();
    for mask in all_masks(3) {
        let p = parabolic(so7.table(), AlgebraTag::So7, &mask)?;
        spaces.push(Subspace::new(dim, p.span(dim)));
        nodes.push(p);
    }
    for mask in all_masks(2) {
        let p = parabolic(emb.table(), AlgebraTag::G2, &mask)?;
        let gens = p.members().into_iter().map(|i| emb.image_of_basis(i).coeffs().to_vec()).collect();
        spaces.push(Subspace::new(dim, gens));
        nodes.push(p);
    }
    let k = nodes.len();
    let below = |a: usize, b: usize| a != b && spaces[b].contains_subspace(&spaces[a]) && !spaces[a].same_as(&spaces[b]);
    let mut arrows = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if below(a, b) && !(0..k).any(|c| below(a, c) && below(c, b)) {
                arrows.push((a, b));
            }
        }
    }
    Ok(InclusionLattice { nodes, arrows })
}
