//! The orbit category of a finite group, coefficient systems, equivariant
//! CW complexes, and the Bredon chain complex.
//!
//! A morphism `G/I -> G/J` of transitive `G`-sets is a coset `gJ` with
//! `g^{-1} I g` contained in `J`, acting by right translation; composition
//! is induced by group multiplication. Coefficient systems are functors
//! from the orbit category to finite-dimensional vector spaces, verified
//! functorial at construction.
//!
//! Equivariant cell structures are given per orbit: an isotropy subgroup,
//! an optional orientation character of that subgroup, and boundary data as
//! formal integer combinations of orbit-category morphisms. Expanding each
//! orbit to its cosets produces the plain cellular chain complex together
//! with the permutation (possibly sign-twisted) action of the group.

use std::collections::BTreeSet;

use crate::complex::{BettiVector, ChainComplex, ComplexGroupAction};
use crate::error::BredonError;
use crate::field::FieldKind;
use crate::group::{FiniteGroup, Subgroup};
use crate::matrix::{Matrix, SparseVec};

/// The orbit category of a finite group: all subgroups as objects, with
/// `Hom(G/I, G/J)` enumerated as coset representatives.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitCategory {
    pub group: FiniteGroup,
    pub objects: Vec<Subgroup>,
    /// `homs[i][j]`: minimal coset representatives `g` of the morphisms
    /// `G/I_i -> G/J_j`, sorted.
    homs: Vec<Vec<Vec<usize>>>,
}

impl OrbitCategory {
    pub fn new(group: &FiniteGroup) -> Result<OrbitCategory, BredonError> {
        let objects = group.all_subgroups()?;
        let n = objects.len();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for (i, sub_i) in objects.iter().enumerate() {
            for (j, sub_j) in objects.iter().enumerate() {
                let mut reps: BTreeSet<usize> = BTreeSet::new();
                for g in group.elements() {
                    let conjugates_in = sub_i
                        .elements
                        .iter()
                        .all(|&x| sub_j.contains(group.conjugate(group.inv(g), x)));
                    if conjugates_in {
                        reps.insert(coset_min_rep(group, g, sub_j));
                    }
                }
                homs[i][j] = reps.into_iter().collect();
            }
        }
        let category = OrbitCategory {
            group: group.clone(),
            objects,
            homs,
        };
        category.verify()?;
        Ok(category)
    }

    fn verify(&self) -> Result<(), BredonError> {
        let n = self.objects.len();
        // Identities present.
        for j in 0..n {
            let id_rep = coset_min_rep(&self.group, self.group.identity(), &self.objects[j]);
            if !self.homs[j][j].contains(&id_rep) {
                return Err(BredonError::NotFunctorial(
                    "orbit category is missing an identity morphism".into(),
                ));
            }
        }
        // Composition lands in the enumerated hom sets; associativity is
        // inherited from group multiplication but we spot-check closure.
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for &f in &self.homs[i][j] {
                        for &g in &self.homs[j][k] {
                            let c = self.compose_reps(f, g, k);
                            if !self.homs[i][k].contains(&c) {
                                return Err(BredonError::NotFunctorial(
                                    "orbit category morphisms are not closed under composition"
                                        .into(),
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Composite of `G/I --f--> G/J --g--> G/K` as a minimal coset rep of
    /// `(f g) K`.
    fn compose_reps(&self, f: usize, g: usize, target: usize) -> usize {
        coset_min_rep(&self.group, self.group.mul(f, g), &self.objects[target])
    }

    pub fn object_index(&self, sub: &Subgroup) -> Option<usize> {
        self.objects.iter().position(|s| s.elements == sub.elements)
    }

    pub fn hom(&self, i: usize, j: usize) -> &[usize] {
        &self.homs[i][j]
    }

    /// Index of the morphism `G/I_i -> G/J_j` given by any representative
    /// `g` of the defining coset.
    pub fn morphism_index(&self, i: usize, j: usize, g: usize) -> Option<usize> {
        let rep = coset_min_rep(&self.group, g, &self.objects[j]);
        self.homs[i][j].binary_search(&rep).ok()
    }
}

fn coset_min_rep(group: &FiniteGroup, g: usize, j: &Subgroup) -> usize {
    j.elements
        .iter()
        .map(|&x| group.mul(g, x))
        .min()
        .expect("subgroup is nonempty")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// A functor from the orbit category to finite-dimensional vector spaces.
///
/// Covariant systems feed Bredon homology, contravariant ones Bredon
/// cohomology; both are verified against identities and all composable
/// pairs at construction.
#[derive(Clone, Debug)]
pub struct CoefficientSystem {
    pub category: OrbitCategory,
    pub variance: Variance,
    pub dims: Vec<usize>,
    /// `maps[i][j][k]`: the matrix assigned to `homs[i][j][k]`. Covariant:
    /// `dims[j] x dims[i]`; contravariant: `dims[i] x dims[j]`.
    maps: Vec<Vec<Vec<Matrix>>>,
    pub label: String,
}

impl CoefficientSystem {
    pub fn new(
        category: OrbitCategory,
        variance: Variance,
        dims: Vec<usize>,
        maps: Vec<Vec<Vec<Matrix>>>,
        label: String,
    ) -> Result<CoefficientSystem, BredonError> {
        let n = category.objects.len();
        if dims.len() != n || maps.len() != n || maps.iter().any(|row| row.len() != n) {
            return Err(BredonError::NotFunctorial("coefficient data shape mismatch".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if maps[i][j].len() != category.homs[i][j].len() {
                    return Err(BredonError::NotFunctorial(format!(
                        "expected one matrix per morphism between objects {i} and {j}"
                    )));
                }
                for m in &maps[i][j] {
                    let (want_rows, want_cols) = match variance {
                        Variance::Covariant => (dims[j], dims[i]),
                        Variance::Contravariant => (dims[i], dims[j]),
                    };
                    if m.rows() != want_rows || m.cols() != want_cols {
                        return Err(BredonError::NotFunctorial(format!(
                            "matrix between objects {i} and {j} has the wrong shape"
                        )));
                    }
                }
            }
        }
        let system = CoefficientSystem {
            category,
            variance,
            dims,
            maps,
            label,
        };
        system.verify()?;
        Ok(system)
    }

    fn verify(&self) -> Result<(), BredonError> {
        let cat = &self.category;
        let n = cat.objects.len();
        let field = self.field();
        for j in 0..n {
            let id_idx = cat
                .morphism_index(j, j, cat.group.identity())
                .expect("identity exists");
            if self.maps[j][j][id_idx] != Matrix::identity(field, self.dims[j]) {
                return Err(BredonError::NotFunctorial(format!(
                    "identity of object {j} is not sent to the identity matrix"
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for (fi, &f) in cat.homs[i][j].iter().enumerate() {
                        for (gi, &g) in cat.homs[j][k].iter().enumerate() {
                            let c = cat.compose_reps(f, g, k);
                            let ci = cat
                                .morphism_index(i, k, c)
                                .expect("composition closure verified");
                            let composite = &self.maps[i][k][ci];
                            let product = match self.variance {
                                Variance::Covariant => self.maps[j][k][gi].mul(&self.maps[i][j][fi]),
                                Variance::Contravariant => {
                                    self.maps[i][j][fi].mul(&self.maps[j][k][gi])
                                }
                            };
                            if *composite != product {
                                return Err(BredonError::NotFunctorial(format!(
                                    "functoriality fails on a composable pair {i} -> {j} -> {k}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldKind {
        self.maps
            .iter()
            .flatten()
            .flatten()
            .next()
            .map(|m| m.field())
            .unwrap_or(FieldKind::Rational)
    }

    pub fn map(&self, i: usize, j: usize, k: usize) -> &Matrix {
        &self.maps[i][j][k]
    }

    /// The constant system: every object gets `K^dim`, every morphism the
    /// identity.
    pub fn constant(
        category: &OrbitCategory,
        field: FieldKind,
        dim: usize,
        variance: Variance,
    ) -> CoefficientSystem {
        let n = category.objects.len();
        let dims = vec![dim; n];
        let maps = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        category.homs[i][j]
                            .iter()
                            .map(|_| Matrix::identity(field, dim))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        CoefficientSystem::new(
            category.clone(),
            variance,
            dims,
            maps,
            format!("constant-{dim}"),
        )
        .expect("constant system is functorial")
    }

    /// The contravariant system `I -> K[Hom(G/I, G/J)]` with morphisms
    /// acting by precomposition; feeds Bredon cohomology.
    pub fn corepresentable(
        category: &OrbitCategory,
        field: FieldKind,
        base: usize,
    ) -> CoefficientSystem {
        let n = category.objects.len();
        let dims: Vec<usize> = (0..n).map(|i| category.homs[i][base].len()).collect();
        let maps = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        category.homs[i][j]
                            .iter()
                            .map(|&f| {
                                // Precomposition K[Hom(j, base)] -> K[Hom(i, base)].
                                let cols: Vec<SparseVec> = category.homs[j][base]
                                    .iter()
                                    .map(|&h| {
                                        let c = category.compose_reps(f, h, base);
                                        let row = category.homs[i][base]
                                            .binary_search(&c)
                                            .expect("composition closure");
                                        vec![(row as u32, field.one())]
                                    })
                                    .collect();
                                Matrix::from_sparse_columns(field, dims[i], cols)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let label = format!(
            "corepresentable-{}",
            subgroup_label(&category.group, &category.objects[base])
        );
        CoefficientSystem::new(category.clone(), Variance::Contravariant, dims, maps, label)
            .expect("corepresentable systems are functorial")
    }

    /// The free covariant system on the object `G/J`: `I -> K[Hom(G/J, G/I)]`
    /// with morphisms acting by post-composition.
    pub fn representable(
        category: &OrbitCategory,
        field: FieldKind,
        base: usize,
    ) -> CoefficientSystem {
        let n = category.objects.len();
        let dims: Vec<usize> = (0..n).map(|i| category.homs[base][i].len()).collect();
        let maps = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        category.homs[i][j]
                            .iter()
                            .map(|&f| {
                                // Post-composition K[Hom(base, i)] -> K[Hom(base, j)].
                                let cols: Vec<SparseVec> = category.homs[base][i]
                                    .iter()
                                    .map(|&h| {
                                        let c = category.compose_reps(h, f, j);
                                        let row = category.homs[base][j]
                                            .binary_search(&c)
                                            .expect("composition closure");
                                        vec![(row as u32, field.one())]
                                    })
                                    .collect();
                                Matrix::from_sparse_columns(field, dims[j], cols)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let label = format!(
            "representable-{}",
            subgroup_label(&category.group, &category.objects[base])
        );
        CoefficientSystem::new(category.clone(), Variance::Covariant, dims, maps, label)
            .expect("representable systems are functorial")
    }
}

fn subgroup_label(group: &FiniteGroup, sub: &Subgroup) -> String {
    let names: Vec<&str> = sub.elements.iter().map(|&x| group.element_name(x)).collect();
    format!("{{{}}}", names.join(","))
}

/// One orbit of cells: an isotropy subgroup, an id for diagnostics, and an
/// optional orientation character (a sign per isotropy element, aligned
/// with `isotropy.elements`). A nontrivial character records that the
/// isotropy fixes the cell setwise but reverses its orientation; such cells
/// are rejected by the pointwise-fixing consumers with a subdivision hint.
#[derive(Clone, Debug, PartialEq)]
pub struct CellOrbit {
    pub id: String,
    pub isotropy: Subgroup,
    pub character: Vec<i8>,
}

impl CellOrbit {
    pub fn plain(id: &str, isotropy: Subgroup) -> CellOrbit {
        CellOrbit {
            id: id.to_string(),
            isotropy,
            character: Vec::new(),
        }
    }

    fn sign_of(&self, position: usize) -> i8 {
        if self.character.is_empty() {
            1
        } else {
            self.character[position]
        }
    }
}

/// A boundary term: `coeff` times the equivariant map sending the base cell
/// of the source orbit to `translate . (base cell of target orbit)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryTerm {
    pub coeff: i64,
    pub target: usize,
    pub translate: usize,
}

/// A finite equivariant CW complex described per orbit of cells.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaCwComplex {
    pub group: FiniteGroup,
    orbits: Vec<Vec<CellOrbit>>,
    /// `boundaries[n][o]`: boundary of the degree-`n` orbit `o`, `n >= 1`,
    /// with targets indexing `orbits[n-1]`.
    boundaries: Vec<Vec<Vec<BoundaryTerm>>>,
}

/// An expanded cell: which orbit it came from and its coset representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpandedCell {
    pub orbit: usize,
    pub rep: usize,
}

impl GammaCwComplex {
    pub fn new(
        group: FiniteGroup,
        orbits: Vec<Vec<CellOrbit>>,
        boundaries: Vec<Vec<Vec<BoundaryTerm>>>,
    ) -> Result<GammaCwComplex, BredonError> {
        if boundaries.len() + 1 != orbits.len().max(1) {
            return Err(BredonError::DecompositionInvalid(
                "need boundary data for every positive degree".into(),
            ));
        }
        for degree in &orbits {
            for orbit in degree {
                group.subgroup_from_elements(&orbit.isotropy.elements)?;
                if !orbit.character.is_empty() {
                    if orbit.character.len() != orbit.isotropy.order() {
                        return Err(BredonError::CharacterInconsistent(orbit.id.clone()));
                    }
                    if orbit.character.iter().any(|&s| s != 1 && s != -1) {
                        return Err(BredonError::CharacterInconsistent(orbit.id.clone()));
                    }
                    // Character must be a homomorphism to {+-1}.
                    let elems = &orbit.isotropy.elements;
                    for (pi, &a) in elems.iter().enumerate() {
                        for (pj, &b) in elems.iter().enumerate() {
                            let ab = group.mul(a, b);
                            let pk = elems.binary_search(&ab).map_err(|_| {
                                BredonError::CharacterInconsistent(orbit.id.clone())
                            })?;
                            if orbit.character[pk] != orbit.character[pi] * orbit.character[pj] {
                                return Err(BredonError::CharacterInconsistent(orbit.id.clone()));
                            }
                        }
                    }
                }
            }
        }
        for (n, degree) in boundaries.iter().enumerate() {
            if degree.len() != orbits[n + 1].len() {
                return Err(BredonError::DecompositionInvalid(format!(
                    "degree {} has {} orbits but {} boundary lists",
                    n + 1,
                    orbits[n + 1].len(),
                    degree.len()
                )));
            }
            for (o, terms) in degree.iter().enumerate() {
                let source = &orbits[n + 1][o];
                for term in terms {
                    let Some(target) = orbits[n].get(term.target) else {
                        return Err(BredonError::InvalidBoundaryMorphism(
                            source.id.clone(),
                            "target orbit out of range".into(),
                        ));
                    };
                    // g^{-1} I g must land in J for an equivariant map.
                    let g = term.translate;
                    let ok = source.isotropy.elements.iter().all(|&x| {
                        target.isotropy.contains(group.conjugate(group.inv(g), x))
                    });
                    if !ok {
                        return Err(BredonError::InvalidBoundaryMorphism(
                            source.id.clone(),
                            format!(
                                "translate {} does not carry isotropy {} into {}",
                                group.element_name(g),
                                subgroup_label(&group, &source.isotropy),
                                subgroup_label(&group, &target.isotropy)
                            ),
                        ));
                    }
                }
            }
        }
        let complex = GammaCwComplex {
            group,
            orbits,
            boundaries,
        };
        complex.verify_expansion()?;
        Ok(complex)
    }

    /// Checks that the expanded differential is equivariant (this is where
    /// inconsistent orientation characters surface) and squares to zero.
    fn verify_expansion(&self) -> Result<(), BredonError> {
        let field = FieldKind::Rational;
        let (chain, cells) = self.expanded_complex(field)?;
        for n in 1..self.orbits.len() {
            let d = chain.differential(n as i64);
            for g in self.group.elements() {
                let act_n = self.action_matrix(field, &cells[n], n, g);
                let act_prev = self.action_matrix(field, &cells[n - 1], n - 1, g);
                if act_prev.mul(&d) != d.mul(&act_n) {
                    // Identify an offending orbit for the error message.
                    let orbit = &self.orbits[n][0];
                    return Err(BredonError::CharacterInconsistent(orbit.id.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        self.orbits.len().saturating_sub(1)
    }

    pub fn orbits(&self) -> &[Vec<CellOrbit>] {
        &self.orbits
    }

    pub fn boundary_terms(&self, degree: usize, orbit: usize) -> &[BoundaryTerm] {
        &self.boundaries[degree - 1][orbit]
    }

    /// The expanded cells per degree: orbits in order, cosets of each orbit
    /// by sorted minimal representative.
    pub fn expanded_cells(&self) -> Vec<Vec<ExpandedCell>> {
        self.orbits
            .iter()
            .map(|degree| {
                let mut cells = Vec::new();
                for (o, orbit) in degree.iter().enumerate() {
                    for coset in self.group.left_cosets(&orbit.isotropy) {
                        cells.push(ExpandedCell { orbit: o, rep: coset[0] });
                    }
                }
                cells
            })
            .collect()
    }

    fn cell_index(&self, cells: &[ExpandedCell], orbit: usize, member: usize, degree: usize) -> (usize, i8) {
        let orb = &self.orbits[degree][orbit];
        let rep = coset_min_rep(&self.group, member, &orb.isotropy);
        let idx = cells
            .iter()
            .position(|c| c.orbit == orbit && c.rep == rep)
            .expect("every coset is an expanded cell");
        // member = rep * j with j in the isotropy; the sign is chi(j).
        let j = self.group.mul(self.group.inv(rep), member);
        let pos = orb
            .isotropy
            .elements
            .binary_search(&j)
            .expect("member and rep lie in the same coset");
        (idx, orb.sign_of(pos))
    }

    /// The plain (non-equivariant) cellular chain complex obtained by
    /// expanding every orbit, with `d^2 = 0` verified.
    pub fn expanded_complex(
        &self,
        field: FieldKind,
    ) -> Result<(ChainComplex, Vec<Vec<ExpandedCell>>), BredonError> {
        let cells = self.expanded_cells();
        let dims: Vec<usize> = cells.iter().map(|c| c.len()).collect();
        let mut diffs = Vec::new();
        for n in 1..self.orbits.len() {
            let mut cols: Vec<SparseVec> = Vec::with_capacity(dims[n]);
            for cell in &cells[n] {
                let mut entries: SparseVec = Vec::new();
                for term in &self.boundaries[n - 1][cell.orbit] {
                    let member = self.group.mul(cell.rep, term.translate);
                    let (idx, sign) = self.cell_index(&cells[n - 1], term.target, member, n - 1);
                    let coeff = field.from_i64(term.coeff * sign as i64);
                    if !coeff.is_zero() {
                        entries.push((idx as u32, coeff));
                    }
                }
                entries.sort_by_key(|e| e.0);
                // Merge duplicate targets.
                let mut merged: SparseVec = Vec::with_capacity(entries.len());
                for (row, v) in entries {
                    match merged.last_mut() {
                        Some((r, acc)) if *r == row => *acc = acc.add(&v),
                        _ => merged.push((row, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                cols.push(merged);
            }
            diffs.push(Matrix::from_sparse_columns(field, dims[n - 1], cols));
        }
        let chain = ChainComplex::new(field, 0, dims, diffs)?;
        Ok((chain, cells))
    }

    fn action_matrix(
        &self,
        field: FieldKind,
        cells: &[ExpandedCell],
        degree: usize,
        g: usize,
    ) -> Matrix {
        let cols = cells
            .iter()
            .map(|cell| {
                let member = self.group.mul(g, cell.rep);
                let (idx, sign) = self.cell_index(cells, cell.orbit, member, degree);
                vec![(idx as u32, field.from_i64(sign as i64))]
            })
            .collect();
        Matrix::from_sparse_columns(field, cells.len(), cols)
    }

    /// The group action on the expanded chain complex.
    pub fn expanded_action(&self, field: FieldKind) -> Result<ComplexGroupAction, BredonError> {
        let (chain, cells) = self.expanded_complex(field)?;
        let matrices = self
            .group
            .elements()
            .map(|g| {
                (0..self.orbits.len())
                    .map(|n| self.action_matrix(field, &cells[n], n, g))
                    .collect()
            })
            .collect();
        Ok(ComplexGroupAction::new(chain, self.group.clone(), matrices)?)
    }

    /// The Bredon chain complex with coefficients in a covariant system:
    /// `C_n = (+)_{n-cell orbits of isotropy I} A(G/I)`, the differential
    /// applying the system to each boundary morphism.
    ///
    /// Contravariant systems produce the Bredon cochain complex, returned
    /// with degrees reversed so it is again a chain complex; use
    /// [`bredon_betti`] for reporting in the natural order.
    pub fn bredon_complex(&self, system: &CoefficientSystem) -> Result<ChainComplex, BredonError> {
        if system.category.group != self.group {
            return Err(BredonError::OrbitCategoryMismatch);
        }
        let field = system.field();
        // Object index and block offset per orbit per degree.
        let mut object_of: Vec<Vec<usize>> = Vec::new();
        let mut offsets: Vec<Vec<usize>> = Vec::new();
        let mut dims: Vec<usize> = Vec::new();
        for degree in &self.orbits {
            let mut objs = Vec::new();
            let mut offs = Vec::new();
            let mut total = 0usize;
            for orbit in degree {
                if !orbit.character.is_empty() && orbit.character.contains(&-1) {
                    return Err(BredonError::OrientationCharacter(orbit.id.clone()));
                }
                let obj = system
                    .category
                    .object_index(&orbit.isotropy)
                    .ok_or_else(|| BredonError::IsotropyNotCovered(orbit.id.clone()))?;
                objs.push(obj);
                offs.push(total);
                total += system.dims[obj];
            }
            object_of.push(objs);
            offsets.push(offs);
            dims.push(total);
        }
        let mut diffs: Vec<Matrix> = Vec::new();
        for n in 1..self.orbits.len() {
            // Covariant: map C_n -> C_{n-1}. Contravariant: C_{n-1} -> C_n
            // (a cochain differential), assembled transposed below.
            let (rows, cols_count) = match system.variance {
                Variance::Covariant => (dims[n - 1], dims[n]),
                Variance::Contravariant => (dims[n], dims[n - 1]),
            };
            let mut block_cols: Vec<Vec<(u32, crate::field::FieldElement)>> =
                vec![Vec::new(); cols_count];
            for (o, terms) in self.boundaries[n - 1].iter().enumerate() {
                let src_obj = object_of[n][o];
                for term in terms {
                    let tgt_obj = object_of[n - 1][term.target];
                    let k = system
                        .category
                        .morphism_index(src_obj, tgt_obj, term.translate)
                        .expect("boundary morphisms validated at construction");
                    let m = system.map(src_obj, tgt_obj, k);
                    let coeff = field.from_i64(term.coeff);
                    match system.variance {
                        Variance::Covariant => {
                            // Block at (offset_{n-1}[target], offset_n[o]).
                            let (roff, coff) = (offsets[n - 1][term.target], offsets[n][o]);
                            for j in 0..m.cols() {
                                for (i, v) in m.column(j) {
                                    block_cols[coff + j]
                                        .push(((roff + i as usize) as u32, v.mul(&coeff)));
                                }
                            }
                        }
                        Variance::Contravariant => {
                            // A(morphism): A(G/J) -> A(G/I) contributes a block
                            // at (offset_n[o], offset_{n-1}[target]).
                            let (roff, coff) = (offsets[n][o], offsets[n - 1][term.target]);
                            for j in 0..m.cols() {
                                for (i, v) in m.column(j) {
                                    block_cols[coff + j]
                                        .push(((roff + i as usize) as u32, v.mul(&coeff)));
                                }
                            }
                        }
                    }
                }
            }
            let cols = block_cols
                .into_iter()
                .map(|mut entries| {
                    entries.sort_by_key(|e| e.0);
                    let mut merged: SparseVec = Vec::with_capacity(entries.len());
                    for (row, v) in entries {
                        match merged.last_mut() {
                            Some((r, acc)) if *r == row => *acc = acc.add(&v),
                            _ => merged.push((row, v)),
                        }
                    }
                    merged.retain(|(_, v)| !v.is_zero());
                    merged
                })
                .collect();
            diffs.push(Matrix::from_sparse_columns(field, rows, cols));
        }
        match system.variance {
            Variance::Covariant => Ok(ChainComplex::new(field, 0, dims, diffs)?),
            Variance::Contravariant => {
                // Reverse degrees so cochain deltas become chain boundaries:
                // C'_k = C^{top-k}, d'_k = delta^{top-k}: C^{top-k} -> C^{top-k+1}.
                let top = dims.len() - 1;
                let rev_dims: Vec<usize> = (0..=top).map(|k| dims[top - k]).collect();
                let rev_diffs: Vec<Matrix> = (1..=top).map(|k| diffs[top - k].clone()).collect();
                Ok(ChainComplex::new(field, 0, rev_dims, rev_diffs)?)
            }
        }
    }

    /// Bredon Betti numbers in homological degrees `0 ..= dimension`,
    /// regardless of variance.
    pub fn bredon_betti(&self, system: &CoefficientSystem) -> Result<BettiVector, BredonError> {
        let betti = self.bredon_complex(system)?.homology();
        Ok(match system.variance {
            Variance::Covariant => betti,
            Variance::Contravariant => BettiVector {
                min_degree: 0,
                betti: betti.betti.into_iter().rev().collect(),
            },
        })
    }

    /// Disjoint union of two complexes over the same group.
    pub fn disjoint_union(&self, other: &GammaCwComplex) -> Result<GammaCwComplex, BredonError> {
        if self.group != other.group {
            return Err(BredonError::DecompositionInvalid(
                "disjoint union requires the same acting group".into(),
            ));
        }
        let top = self.orbits.len().max(other.orbits.len());
        let mut orbits = Vec::with_capacity(top);
        let mut boundaries = Vec::with_capacity(top.saturating_sub(1));
        for n in 0..top {
            let mut degree: Vec<CellOrbit> = Vec::new();
            degree.extend(self.orbits.get(n).cloned().unwrap_or_default());
            degree.extend(other.orbits.get(n).cloned().unwrap_or_default());
            orbits.push(degree);
        }
        for n in 1..top {
            let left_offset = self.orbits.get(n - 1).map_or(0, |d| d.len());
            let mut degree: Vec<Vec<BoundaryTerm>> = Vec::new();
            if let Some(b) = self.boundaries.get(n - 1) {
                degree.extend(b.clone());
            }
            if n < other.orbits.len() {
                for terms in &other.boundaries[n - 1] {
                    degree.push(
                        terms
                            .iter()
                            .map(|t| BoundaryTerm {
                                coeff: t.coeff,
                                target: t.target + left_offset,
                                translate: t.translate,
                            })
                            .collect(),
                    );
                }
            }
            boundaries.push(degree);
        }
        GammaCwComplex::new(self.group.clone(), orbits, boundaries)
    }
}

/// Report of the additivity and Mayer-Vietoris checks.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub union_betti: BettiVector,
    pub sum_betti: BettiVector,
    pub additivity_ok: bool,
    pub mayer_vietoris: Option<MayerVietorisReport>,
}

#[derive(Clone, Debug)]
pub struct MayerVietorisReport {
    pub euler_whole: i64,
    pub euler_pieces: i64,
    pub euler_ok: bool,
    /// Per degree: `b_n(X) <= b_n(X+) + b_n(X-) + b_{n-1}(X0)`.
    pub rank_inequalities_ok: bool,
}

/// A decomposition `X = X+ u_{X0} X-` supplied as three complexes.
pub struct Decomposition<'a> {
    pub plus: &'a GammaCwComplex,
    pub minus: &'a GammaCwComplex,
    pub intersection: &'a GammaCwComplex,
}

/// Verifies (i) additivity of Bredon homology on `x LL y` and (ii) the
/// Euler-characteristic identity and rank inequalities that Mayer-Vietoris
/// forces on a decomposition of `x`.
pub fn check_axioms(
    x: &GammaCwComplex,
    y: &GammaCwComplex,
    system: &CoefficientSystem,
    decomposition: Option<Decomposition<'_>>,
) -> Result<AxiomReport, BredonError> {
    let union = x.disjoint_union(y)?;
    let union_betti = union.bredon_betti(system)?;
    let sum_betti = x.bredon_betti(system)?.add(&y.bredon_betti(system)?);
    let additivity_ok = union_betti == sum_betti;
    let mayer_vietoris = match decomposition {
        None => None,
        Some(d) => {
            let whole = x.bredon_betti(system)?;
            let plus = d.plus.bredon_betti(system)?;
            let minus = d.minus.bredon_betti(system)?;
            let zero = d.intersection.bredon_betti(system)?;
            let euler_whole = whole.euler_characteristic();
            let euler_pieces = plus.euler_characteristic() + minus.euler_characteristic()
                - zero.euler_characteristic();
            let top = whole.min_degree + whole.betti.len() as i64;
            let rank_inequalities_ok = (0..=top).all(|n| {
                whole.in_degree(n) <= plus.in_degree(n) + minus.in_degree(n) + zero.in_degree(n - 1)
            });
            Some(MayerVietorisReport {
                euler_whole,
                euler_pieces,
                euler_ok: euler_whole == euler_pieces,
                rank_inequalities_ok,
            })
        }
    };
    Ok(AxiomReport {
        union_betti,
        sum_betti,
        additivity_ok,
        mayer_vietoris,
    })
}

/// Built-in equivariant cell structures used across tests and the CLI.
pub mod library {
    use super::*;

    /// A single fixed point of the whole group.
    pub fn point(group: &FiniteGroup) -> GammaCwComplex {
        let whole = group
            .subgroup_from_elements(&group.elements().collect::<Vec<_>>())
            .unwrap();
        GammaCwComplex::new(
            group.clone(),
            vec![vec![CellOrbit::plain("pt", whole)]],
            vec![],
        )
        .unwrap()
    }

    /// The orbit `G/I` as a zero-dimensional complex.
    pub fn orbit(group: &FiniteGroup, isotropy: Subgroup) -> GammaCwComplex {
        GammaCwComplex::new(
            group.clone(),
            vec![vec![CellOrbit::plain("orbit", isotropy)]],
            vec![],
        )
        .unwrap()
    }

    /// The circle with the free rotation action of `Z_n` (`n = 1` gives the
    /// plain circle): one free vertex orbit, one free edge orbit, each edge
    /// running from a vertex to its translate by the generator.
    pub fn rotation_circle(n: usize) -> GammaCwComplex {
        let group = FiniteGroup::cyclic(n);
        let trivial = group.subgroup_from_elements(&[0]).unwrap();
        let generator = if n == 1 { 0 } else { 1 };
        GammaCwComplex::new(
            group,
            vec![
                vec![CellOrbit::plain("v", trivial.clone())],
                vec![CellOrbit::plain("a", trivial)],
            ],
            vec![vec![vec![
                BoundaryTerm { coeff: 1, target: 0, translate: generator },
                BoundaryTerm { coeff: -1, target: 0, translate: 0 },
            ]]],
        )
        .unwrap()
    }

    /// The circle with the reflection action of `Z_2`: two fixed vertices,
    /// one free orbit of edges from one fixed point to the other.
    pub fn reflection_circle() -> GammaCwComplex {
        let group = FiniteGroup::cyclic(2);
        let whole = group.subgroup_from_elements(&[0, 1]).unwrap();
        let trivial = group.subgroup_from_elements(&[0]).unwrap();
        GammaCwComplex::new(
            group,
            vec![
                vec![
                    CellOrbit::plain("w0", whole.clone()),
                    CellOrbit::plain("w1", whole),
                ],
                vec![CellOrbit::plain("a", trivial)],
            ],
            vec![vec![vec![
                BoundaryTerm { coeff: 1, target: 1, translate: 0 },
                BoundaryTerm { coeff: -1, target: 0, translate: 0 },
            ]]],
        )
        .unwrap()
    }

    /// The torus with the `Z_2` rotation (hyperelliptic) action fixing four
    /// points. Vertices sit at the fixed points; edges and faces form free
    /// orbits of the quartered square cell structure.
    pub fn torus_z2_rotation() -> GammaCwComplex {
        let group = FiniteGroup::cyclic(2);
        let whole = group.subgroup_from_elements(&[0, 1]).unwrap();
        let free = group.subgroup_from_elements(&[0]).unwrap();
        // Vertex orbits 0..4: P00, P10, P01, P11 (all fixed).
        let vertices = vec![
            CellOrbit::plain("P00", whole.clone()),
            CellOrbit::plain("P10", whole.clone()),
            CellOrbit::plain("P01", whole.clone()),
            CellOrbit::plain("P11", whole),
        ];
        // Edge orbits 0..4: a (bottom), b (middle horizontal), c (left
        // vertical), d (middle vertical); each is a free orbit of two edges.
        let edges = vec![
            CellOrbit::plain("a", free.clone()),
            CellOrbit::plain("b", free.clone()),
            CellOrbit::plain("c", free.clone()),
            CellOrbit::plain("d", free.clone()),
        ];
        // Face orbits: F = [0,1/2]^2 square, G = [1/2,1]x[0,1/2] square.
        let faces = vec![CellOrbit::plain("F", free.clone()), CellOrbit::plain("G", free)];
        let edge_boundaries = vec![
            // a: P00 -> P10
            vec![
                BoundaryTerm { coeff: 1, target: 1, translate: 0 },
                BoundaryTerm { coeff: -1, target: 0, translate: 0 },
            ],
            // b: P01 -> P11
            vec![
                BoundaryTerm { coeff: 1, target: 3, translate: 0 },
                BoundaryTerm { coeff: -1, target: 2, translate: 0 },
            ],
            // c: P00 -> P01
            vec![
                BoundaryTerm { coeff: 1, target: 2, translate: 0 },
                BoundaryTerm { coeff: -1, target: 0, translate: 0 },
            ],
            // d: P10 -> P11
            vec![
                BoundaryTerm { coeff: 1, target: 3, translate: 0 },
                BoundaryTerm { coeff: -1, target: 1, translate: 0 },
            ],
        ];
        let face_boundaries = vec![
            // dF = a + d - b - c.
            vec![
                BoundaryTerm { coeff: 1, target: 0, translate: 0 },
                BoundaryTerm { coeff: 1, target: 3, translate: 0 },
                BoundaryTerm { coeff: -1, target: 1, translate: 0 },
                BoundaryTerm { coeff: -1, target: 2, translate: 0 },
            ],
            // dG = -sigma.a + c + sigma.b - d.
            vec![
                BoundaryTerm { coeff: -1, target: 0, translate: 1 },
                BoundaryTerm { coeff: 1, target: 2, translate: 0 },
                BoundaryTerm { coeff: 1, target: 1, translate: 1 },
                BoundaryTerm { coeff: -1, target: 3, translate: 0 },
            ],
        ];
        GammaCwComplex::new(
            FiniteGroup::cyclic(2),
            vec![vertices, edges, faces],
            vec![edge_boundaries, face_boundaries],
        )
        .unwrap()
    }

    /// The reflection circle modeled with a single fixed vertex and a
    /// single edge that the reflection maps to itself reversing
    /// orientation (character -1). The second fixed point sits in the
    /// interior of the edge, so fixed-point computations must reject this
    /// structure and ask for a subdivision.
    pub fn reflection_circle_coarse() -> GammaCwComplex {
        let group = FiniteGroup::cyclic(2);
        let whole = group.subgroup_from_elements(&[0, 1]).unwrap();
        let mut edge = CellOrbit::plain("loop", whole.clone());
        edge.character = vec![1, -1];
        GammaCwComplex::new(
            group,
            vec![vec![CellOrbit::plain("w", whole)], vec![edge]],
            vec![vec![vec![]]],
        )
        .unwrap()
    }

    /// Left half of the reflection circle: one fixed vertex, one free
    /// vertex orbit, one free edge orbit joining them.
    pub fn reflection_half_arc(side: usize) -> GammaCwComplex {
        let group = FiniteGroup::cyclic(2);
        let whole = group.subgroup_from_elements(&[0, 1]).unwrap();
        let free = group.subgroup_from_elements(&[0]).unwrap();
        let id = if side == 0 { "w0" } else { "w1" };
        GammaCwComplex::new(
            group,
            vec![
                vec![CellOrbit::plain(id, whole), CellOrbit::plain("m", free.clone())],
                vec![CellOrbit::plain("h", free)],
            ],
            // Edge from the fixed vertex to the free midpoint orbit.
            vec![vec![vec![
                BoundaryTerm { coeff: 1, target: 1, translate: 0 },
                BoundaryTerm { coeff: -1, target: 0, translate: 0 },
            ]]],
        )
        .unwrap()
    }

    /// The free orbit of two points, the collar of the reflection circle
    /// decomposition.
    pub fn free_point_pair() -> GammaCwComplex {
        let group = FiniteGroup::cyclic(2);
        let free = group.subgroup_from_elements(&[0]).unwrap();
        orbit(&group, free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldKind {
        FieldKind::Rational
    }

    #[test]
    fn orbit_category_of_trivial_group() {
        let oc = OrbitCategory::new(&FiniteGroup::trivial()).unwrap();
        assert_eq!(oc.objects.len(), 1);
        assert_eq!(oc.hom(0, 0).len(), 1);
    }

    #[test]
    fn orbit_category_of_z2() {
        let oc = OrbitCategory::new(&FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(oc.objects.len(), 2);
        // objects[0] = trivial, objects[1] = whole group.
        assert_eq!(oc.hom(0, 0).len(), 2);
        assert_eq!(oc.hom(0, 1).len(), 1);
        assert_eq!(oc.hom(1, 0).len(), 0);
        assert_eq!(oc.hom(1, 1).len(), 1);
    }

    #[test]
    fn orbit_category_of_klein_four_has_five_objects() {
        let v4 = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        let oc = OrbitCategory::new(&v4).unwrap();
        assert_eq!(oc.objects.len(), 5);
    }

    #[test]
    fn hom_set_size_formula() {
        // |Hom(G/I, G/J)| = |{g : g^{-1} I g <= J}| / |J|.
        for group in [FiniteGroup::symmetric(3), FiniteGroup::cyclic(4)] {
            let oc = OrbitCategory::new(&group).unwrap();
            for (i, sub_i) in oc.objects.iter().enumerate() {
                for (j, sub_j) in oc.objects.iter().enumerate() {
                    let count = group
                        .elements()
                        .filter(|&g| {
                            sub_i
                                .elements
                                .iter()
                                .all(|&x| sub_j.contains(group.conjugate(group.inv(g), x)))
                        })
                        .count();
                    assert_eq!(oc.hom(i, j).len(), count / sub_j.order());
                }
            }
        }
    }

    #[test]
    fn constant_system_builds_for_small_groups() {
        for group in [FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)] {
            let oc = OrbitCategory::new(&group).unwrap();
            let sys = CoefficientSystem::constant(&oc, q(), 1, Variance::Covariant);
            assert_eq!(sys.dims.iter().sum::<usize>(), oc.objects.len());
            let zero = CoefficientSystem::constant(&oc, q(), 0, Variance::Covariant);
            assert!(zero.dims.iter().all(|&d| d == 0));
        }
    }

    #[test]
    fn zero_dimensional_constant_system_kills_homology() {
        let x = library::reflection_circle();
        let oc = OrbitCategory::new(&x.group).unwrap();
        let zero = CoefficientSystem::constant(&oc, q(), 0, Variance::Covariant);
        assert!(x.bredon_betti(&zero).unwrap().betti.iter().all(|&b| b == 0));
    }

    #[test]
    fn representable_systems_are_functorial() {
        let group = FiniteGroup::symmetric(3);
        let oc = OrbitCategory::new(&group).unwrap();
        for base in 0..oc.objects.len() {
            let _ = CoefficientSystem::representable(&oc, q(), base);
        }
    }

    #[test]
    fn corepresentable_cohomology_of_equivariant_circles() {
        // With the contravariant system K[Hom(-, G/e)], only free orbits
        // contribute; the cochain complex computes compactly-supported
        // cohomology of the free locus.
        let q = FieldKind::Rational;
        let refl = library::reflection_circle();
        let oc = OrbitCategory::new(&refl.group).unwrap();
        let free_obj = oc
            .object_index(&refl.group.subgroup_from_elements(&[0]).unwrap())
            .unwrap();
        let sys = CoefficientSystem::corepresentable(&oc, q, free_obj);
        // The free locus is two open arcs.
        assert_eq!(refl.bredon_betti(&sys).unwrap().betti, vec![0, 2]);

        let rot = library::rotation_circle(2);
        let sys = CoefficientSystem::corepresentable(&oc, q, free_obj);
        assert_eq!(rot.bredon_betti(&sys).unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn non_functorial_data_rejected() {
        let oc = OrbitCategory::new(&FiniteGroup::cyclic(2)).unwrap();
        // Start from the constant system and corrupt a non-identity map.
        let n = oc.objects.len();
        let mut maps: Vec<Vec<Vec<Matrix>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| oc.hom(i, j).iter().map(|_| Matrix::identity(q(), 1)).collect())
                    .collect()
            })
            .collect();
        // Hom(free, free) has two morphisms; send the nontrivial one to 2.
        maps[0][0][1] = Matrix::from_i64_rows(q(), &[vec![2]]);
        let r = CoefficientSystem::new(oc, Variance::Covariant, vec![1; n], maps, "broken".into());
        assert!(matches!(r, Err(BredonError::NotFunctorial(_))));
    }

    #[test]
    fn expanded_rotation_circle_is_a_circle() {
        let x = library::rotation_circle(2);
        let (chain, cells) = x.expanded_complex(q()).unwrap();
        assert_eq!(chain.dims(), &[2, 2]);
        assert_eq!(cells[0].len(), 2);
        assert_eq!(chain.homology().betti, vec![1, 1]);
    }

    #[test]
    fn expanded_torus_is_a_torus() {
        let x = library::torus_z2_rotation();
        let (chain, _) = x.expanded_complex(q()).unwrap();
        assert_eq!(chain.dims(), &[4, 8, 4]);
        assert_eq!(chain.homology().betti, vec![1, 2, 1]);
        assert_eq!(chain.euler_characteristic(), 0);
    }

    #[test]
    fn expanded_reflection_circle() {
        let x = library::reflection_circle();
        let (chain, _) = x.expanded_complex(q()).unwrap();
        assert_eq!(chain.dims(), &[2, 2]);
        assert_eq!(chain.homology().betti, vec![1, 1]);
    }

    #[test]
    fn coarse_reflection_circle_expands_with_signs() {
        let x = library::reflection_circle_coarse();
        let (chain, _) = x.expanded_complex(q()).unwrap();
        assert_eq!(chain.dims(), &[1, 1]);
        assert_eq!(chain.homology().betti, vec![1, 1]);
        // The reflection acts by -1 on the edge.
        let action = x.expanded_action(q()).unwrap();
        assert_eq!(action.matrix(1, 1).get(0, 0), q().from_i64(-1));
    }

    #[test]
    fn bredon_point_with_constant_coefficients() {
        let group = FiniteGroup::cyclic(2);
        let oc = OrbitCategory::new(&group).unwrap();
        let sys = CoefficientSystem::constant(&oc, q(), 1, Variance::Covariant);
        let betti = library::point(&group).bredon_betti(&sys).unwrap();
        assert_eq!(betti.betti, vec![1]);
    }

    #[test]
    fn bredon_dimension_axiom_on_orbits() {
        // H_0(G/I) = A(G/I), nothing above.
        for group in [FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)] {
            let oc = OrbitCategory::new(&group).unwrap();
            let systems: Vec<CoefficientSystem> = (0..oc.objects.len())
                .map(|b| CoefficientSystem::representable(&oc, q(), b))
                .chain([CoefficientSystem::constant(&oc, q(), 1, Variance::Covariant)])
                .collect();
            for (i, sub) in oc.objects.iter().enumerate() {
                let x = library::orbit(&group, sub.clone());
                for sys in &systems {
                    let betti = x.bredon_betti(sys).unwrap();
                    assert_eq!(betti.betti, vec![sys.dims[i]]);
                }
            }
        }
    }

    #[test]
    fn bredon_free_circle_reduces_to_quotient() {
        // Free rotation: constant coefficients compute H(S^1/Z_2) = H(S^1).
        let x = library::rotation_circle(2);
        let oc = OrbitCategory::new(&x.group).unwrap();
        let sys = CoefficientSystem::constant(&oc, q(), 1, Variance::Covariant);
        assert_eq!(x.bredon_betti(&sys).unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn bredon_reflection_circle_is_an_interval() {
        let x = library::reflection_circle();
        let oc = OrbitCategory::new(&x.group).unwrap();
        let sys = CoefficientSystem::constant(&oc, q(), 1, Variance::Covariant);
        assert_eq!(x.bredon_betti(&sys).unwrap().betti, vec![1, 0]);
    }

    #[test]
    fn bredon_contravariant_matches_covariant_for_constant() {
        // Over a field with constant coefficients homology and cohomology
        // have equal dimensions degreewise.
        let x = library::reflection_circle();
        let oc = OrbitCategory::new(&x.group).unwrap();
        let cov = CoefficientSystem::constant(&oc, q(), 1, Variance::Covariant);
        let con = CoefficientSystem::constant(&oc, q(), 1, Variance::Contravariant);
        assert_eq!(
            x.bredon_betti(&cov).unwrap().betti,
            x.bredon_betti(&con).unwrap().betti
        );
    }

    #[test]
    fn bredon_rejects_oriented_characters() {
        let x = library::reflection_circle_coarse();
        let oc = OrbitCategory::new(&x.group).unwrap();
        let sys = CoefficientSystem::constant(&oc, q(), 1, Variance::Covariant);
        assert!(matches!(
            x.bredon_complex(&sys),
            Err(BredonError::OrientationCharacter(_))
        ));
    }

    #[test]
    fn additivity_on_disjoint_unions() {
        let group = FiniteGroup::cyclic(2);
        let oc = OrbitCategory::new(&group).unwrap();
        let sys = CoefficientSystem::constant(&oc, q(), 1, Variance::Covariant);
        let p = library::point(&group);
        let report = check_axioms(&p, &p, &sys, None).unwrap();
        assert!(report.additivity_ok);
        assert_eq!(report.union_betti.betti, vec![2]);
        let x = library::reflection_circle();
        let report = check_axioms(&x, &p, &sys, None).unwrap();
        assert!(report.additivity_ok);
    }

    #[test]
    fn mayer_vietoris_on_reflection_circle() {
        // Reflection circle = two half arcs glued over a free point pair.
        let x = library::reflection_circle();
        let plus = library::reflection_half_arc(0);
        let minus = library::reflection_half_arc(1);
        let zero = library::free_point_pair();
        let oc = OrbitCategory::new(&x.group).unwrap();
        let sys = CoefficientSystem::constant(&oc, q(), 1, Variance::Covariant);
        let report = check_axioms(
            &x,
            &library::point(&x.group),
            &sys,
            Some(Decomposition {
                plus: &plus,
                minus: &minus,
                intersection: &zero,
            }),
        )
        .unwrap();
        let mv = report.mayer_vietoris.unwrap();
        assert!(mv.euler_ok, "{} vs {}", mv.euler_whole, mv.euler_pieces);
        assert!(mv.rank_inequalities_ok);
    }

    #[test]
    fn invalid_boundary_morphism_rejected() {
        // An edge with full isotropy cannot map onto a free vertex orbit.
        let group = FiniteGroup::cyclic(2);
        let whole = group.subgroup_from_elements(&[0, 1]).unwrap();
        let free = group.subgroup_from_elements(&[0]).unwrap();
        let r = GammaCwComplex::new(
            group,
            vec![
                vec![CellOrbit::plain("v", free)],
                vec![CellOrbit::plain("e", whole)],
            ],
            vec![vec![vec![BoundaryTerm { coeff: 1, target: 0, translate: 0 }]]],
        );
        assert!(matches!(r, Err(BredonError::InvalidBoundaryMorphism(..))));
    }

    #[test]
    fn d_squared_violation_rejected() {
        // Two vertices, one edge, one face with dFace = edge but
        // dEdge != 0: the square fails.
        let group = FiniteGroup::trivial();
        let t = group.subgroup_from_elements(&[0]).unwrap();
        let r = GammaCwComplex::new(
            group,
            vec![
                vec![CellOrbit::plain("v0", t.clone()), CellOrbit::plain("v1", t.clone())],
                vec![CellOrbit::plain("e", t.clone())],
                vec![CellOrbit::plain("f", t)],
            ],
            vec![
                vec![vec![
                    BoundaryTerm { coeff: 1, target: 1, translate: 0 },
                    BoundaryTerm { coeff: -1, target: 0, translate: 0 },
                ]],
                vec![vec![BoundaryTerm { coeff: 1, target: 0, translate: 0 }]],
            ],
        );
        assert!(r.is_err());
    }
}
