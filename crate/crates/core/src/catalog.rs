//! Concrete finite-dimensional instances: group algebras, function algebras
//! with translation actions, Sweedler's four-dimensional Hopf algebra acting on
//! `k[y]/(y²)`, matrix algebras, and the trivial cases.

use crate::actions::LeftModuleAlgebra;
use crate::algebra::{Coalgebra, HopfAlgebra, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec, Tensor3};
use crate::scalar::FieldSpec;

/// Default prime field for the catalog.
pub const DEFAULT_PRIME: u32 = 7;

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    identity: usize,
}

impl Group {
    /// Validates associativity, a two-sided identity and the given inverses.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>, inverses: Vec<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 || labels.len() != n || inverses.len() != n {
            return Err(Error::NotAGroup("table, labels and inverses must have equal nonzero length".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table is not a square table over its own elements".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for (x, &y) in inverses.iter().enumerate() {
            if y >= n || table[x][y] != identity || table[y][x] != identity {
                return Err(Error::NotAGroup(format!("{y} is not an inverse of {x}")));
            }
        }
        Ok(Group { labels, table, inverses, identity })
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let inverses = (0..n).map(|a| (n - a) % n).collect();
        Group::new(labels, table, inverses).expect("cyclic group table is valid")
    }

    /// `S_3` as permutations of `{0,1,2}` in lexicographic one-line order;
    /// the product is composition `(στ)(i) = σ(τ(i))`.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms.iter().map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect()).collect();
        let inverses = perms
            .iter()
            .map(|s| {
                let mut inv = [0; 3];
                for i in 0..3 {
                    inv[s[i]] = i;
                }
                index(inv)
            })
            .collect();
        let labels = perms.iter().map(|p| format!("[{}{}{}]", p[0], p[1], p[2])).collect();
        Group::new(labels, table, inverses).expect("S3 table is valid")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }
}

/// Parity of the `S_3` elements of [`Group::symmetric3`] as a map onto `C_2`.
pub fn s3_sign() -> Vec<usize> {
    vec![0, 1, 1, 0, 0, 1]
}

pub fn trivial_hopf(field: FieldSpec) -> HopfAlgebra {
    let algebra = StructureAlgebra::ground(field);
    let comult = Matrix::from_columns(1, vec![SparseVec::basis(field, 1, 0)]);
    let coalgebra = Coalgebra::new(field, comult, SparseVec::basis(field, 1, 0)).expect("dims");
    HopfAlgebra::new(algebra, coalgebra, Matrix::identity(field, 1)).expect("invertible")
}

/// `kG` with `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(field: FieldSpec, g: &Group) -> HopfAlgebra {
    let n = g.order();
    let e = |i| SparseVec::basis(field, n, i);
    let algebra = StructureAlgebra::from_products(field, g.labels.clone(), e(g.identity), |a, b| e(g.mul(a, b)));
    let comult = Matrix::from_fn(n * n, n, |a| SparseVec::basis(field, n * n, a * n + a));
    let counit = SparseVec::from_dense(&vec![field.one(); n]);
    let coalgebra = Coalgebra::new(field, comult, counit).expect("dims");
    let antipode = Matrix::permutation(field, n, &g.inverses);
    HopfAlgebra::with_inverse(algebra, coalgebra, antipode.clone(), antipode).expect("involution")
}

/// Group algebra from a raw Cayley table; fails with `NotAGroup`.
pub fn group_algebra_from_table(
    field: FieldSpec,
    cayley: Vec<Vec<usize>>,
    inverses: Vec<usize>,
) -> Result<HopfAlgebra> {
    let labels = (0..cayley.len()).map(|i| format!("g{i}")).collect();
    Ok(group_algebra(field, &Group::new(labels, cayley, inverses)?))
}

/// `k^G`: pointwise product on the point masses `δ_x`, unit `Σ δ_x`.
pub fn function_algebra(field: FieldSpec, g: &Group) -> StructureAlgebra {
    let n = g.order();
    let labels = g.labels.iter().map(|l| format!("δ{l}")).collect();
    let unit = SparseVec::from_dense(&vec![field.one(); n]);
    StructureAlgebra::from_products(field, labels, unit, |x, y| {
        if x == y {
            SparseVec::basis(field, n, x)
        } else {
            SparseVec::zero(n)
        }
    })
}

/// `k^G` with `kG` acting by translation, `g·δ_x = δ_{gx}`.
pub fn function_algebra_with_translation(field: FieldSpec, g: &Group) -> LeftModuleAlgebra {
    let n = g.order();
    let act = Tensor3::from_fn([n, n, n], |h, x| SparseVec::basis(field, n, g.mul(h, x)));
    LeftModuleAlgebra::new(group_algebra(field, g), function_algebra(field, g), act).expect("shapes agree")
}

/// `k^T` with `kG` acting through a homomorphism `φ: G → T`, `g·δ_x = δ_{φ(g)x}`.
pub fn function_algebra_via_homomorphism(
    field: FieldSpec,
    acting: &Group,
    target: &Group,
    hom: &[usize],
) -> Result<LeftModuleAlgebra> {
    if hom.len() != acting.order() || hom.iter().any(|&t| t >= target.order()) {
        return Err(Error::NotAGroup("homomorphism has the wrong shape".into()));
    }
    for a in 0..acting.order() {
        for b in 0..acting.order() {
            if hom[acting.mul(a, b)] != target.mul(hom[a], hom[b]) {
                return Err(Error::NotAGroup(format!("map is not multiplicative at ({a}, {b})")));
            }
        }
    }
    let n = target.order();
    let act = Tensor3::from_fn([acting.order(), n, n], |h, x| SparseVec::basis(field, n, target.mul(hom[h], x)));
    LeftModuleAlgebra::new(group_algebra(field, acting), function_algebra(field, target), act)
}

/// Sweedler's four-dimensional Hopf algebra, basis `{1, g, x, gx}`:
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`,
/// `S(g) = g`, `S(x) = -gx`.
pub fn sweedler_h4(field: FieldSpec) -> HopfAlgebra {
    let n = 4;
    let v =
        |terms: &[(usize, i64)]| SparseVec::from_terms(n, terms.iter().map(|&(i, c)| (i, field.from_i64(c))).collect());
    // products e_i e_j for i, j in (1, g, x, gx)
    let table: [[&[(usize, i64)]; 4]; 4] = [
        [&[(0, 1)], &[(1, 1)], &[(2, 1)], &[(3, 1)]],
        [&[(1, 1)], &[(0, 1)], &[(3, 1)], &[(2, 1)]],
        [&[(2, 1)], &[(3, -1)], &[], &[]],
        [&[(3, 1)], &[(2, -1)], &[], &[]],
    ];
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let algebra = StructureAlgebra::from_products(field, labels, v(&[(0, 1)]), |i, j| v(table[i][j]));
    let t = |a: usize, b: usize| a * n + b;
    let comult_cols: [&[(usize, i64)]; 4] =
        [&[(t(0, 0), 1)], &[(t(1, 1), 1)], &[(t(2, 0), 1), (t(1, 2), 1)], &[(t(3, 1), 1), (t(0, 3), 1)]];
    let comult = Matrix::from_fn(n * n, n, |i| {
        SparseVec::from_terms(n * n, comult_cols[i].iter().map(|&(k, c)| (k, field.from_i64(c))).collect())
    });
    let coalgebra = Coalgebra::new(field, comult, v(&[(0, 1), (1, 1)])).expect("dims");
    let antipode = Matrix::from_columns(n, vec![v(&[(0, 1)]), v(&[(1, 1)]), v(&[(3, -1)]), v(&[(2, 1)])]);
    HopfAlgebra::new(algebra, coalgebra, antipode).expect("antipode is bijective")
}

/// `k[y]/(y²)` with basis `{1, y}`.
pub fn truncated_polynomial(field: FieldSpec) -> StructureAlgebra {
    let e = |i| SparseVec::basis(field, 2, i);
    StructureAlgebra::from_products(field, vec!["1".into(), "y".into()], e(0), |i, j| match (i, j) {
        (0, k) | (k, 0) => e(k),
        _ => SparseVec::zero(2),
    })
}

/// `H4` acting on `k[y]/(y²)`: `g·y = -y`, `x·1 = 0`, `x·y = 1`.
pub fn sweedler_module_algebra(field: FieldSpec) -> LeftModuleAlgebra {
    let v =
        |terms: &[(usize, i64)]| SparseVec::from_terms(2, terms.iter().map(|&(i, c)| (i, field.from_i64(c))).collect());
    // rows: acting basis element (1, g, x, gx); columns: (1, y)
    let table: [[&[(usize, i64)]; 2]; 4] =
        [[&[(0, 1)], &[(1, 1)]], [&[(0, 1)], &[(1, -1)]], [&[], &[(0, 1)]], [&[], &[(0, 1)]]];
    let act = Tensor3::from_fn([4, 2, 2], |h, a| v(table[h][a]));
    LeftModuleAlgebra::new(sweedler_h4(field), truncated_polynomial(field), act).expect("shapes agree")
}

/// `M_n(k)` with matrix units `E_ij` at index `i*n + j`.
pub fn matrix_algebra(field: FieldSpec, n: usize) -> StructureAlgebra {
    let d = n * n;
    let labels = (0..n).flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1))).collect();
    let unit = SparseVec::from_terms(d, (0..n).map(|i| (i * n + i, field.one())).collect());
    StructureAlgebra::from_products(field, labels, unit, |p, q| {
        let (i, j, k, l) = (p / n, p % n, q / n, q % n);
        if j == k {
            SparseVec::basis(field, d, i * n + l)
        } else {
            SparseVec::zero(d)
        }
    })
}

/// Upper triangular 2×2 matrices, basis `{E11, E12, E22}`.
pub fn upper_triangular2(field: FieldSpec) -> StructureAlgebra {
    let e = |i| SparseVec::basis(field, 3, i);
    let unit = SparseVec::from_terms(3, vec![(0, field.one()), (2, field.one())]);
    StructureAlgebra::from_products(field, vec!["E11".into(), "E12".into(), "E22".into()], unit, |p, q| match (p, q) {
        (0, 0) => e(0),
        (0, 1) => e(1),
        (1, 2) => e(1),
        (2, 2) => e(2),
        _ => SparseVec::zero(3),
    })
}

/// `(k, k)`: the ground field acted on by the trivial Hopf algebra.
pub fn trivial_module_algebra(field: FieldSpec) -> LeftModuleAlgebra {
    let act = Tensor3::from_fn([1, 1, 1], |_, _| SparseVec::basis(field, 1, 0));
    LeftModuleAlgebra::new(trivial_hopf(field), StructureAlgebra::ground(field), act).expect("shapes agree")
}

/// Names accepted by [`instance`], in catalog order.
pub const INSTANCE_NAMES: [&str; 5] = ["trivial", "c2", "s3", "h4", "s3-sign"];

pub fn instance(name: &str, field: FieldSpec) -> Option<(LeftModuleAlgebra, String)> {
    let (m, what) = match name {
        "trivial" => (trivial_module_algebra(field), "(k, k)"),
        "c2" => (function_algebra_with_translation(field, &Group::cyclic(2)), "(k^C2, kC2) by translation"),
        "s3" => (function_algebra_with_translation(field, &Group::symmetric3()), "(k^S3, kS3) by translation"),
        "h4" => (sweedler_module_algebra(field), "(k[y]/(y^2), H4)"),
        "s3-sign" => (
            function_algebra_via_homomorphism(field, &Group::symmetric3(), &Group::cyclic(2), &s3_sign())
                .expect("sign is a homomorphism"),
            "(k^C2, kS3) through the sign character",
        ),
        _ => return None,
    };
    Some((m, format!("{what} over {field}")))
}

/// Every catalog instance over the rationals and over `F_7`.
pub fn all_instances() -> Vec<(LeftModuleAlgebra, String)> {
    let fields = [FieldSpec::Rationals, FieldSpec::Prime(DEFAULT_PRIME)];
    fields.iter().flat_map(|&f| INSTANCE_NAMES.iter().map(move |n| instance(n, f).expect("known name"))).collect()
}
