//! Weight modules of the rank-2 algebra: standard and simple modules, tensor
//! products, duals, graded characters and composition factors.

mod character;
mod fixed;
mod standard;

pub use character::{
    closed_form_character, composition_factors, composition_factors_of, grothendieck_product,
    standard_tensor_decomposition, CompositionList, GradedCharacter, GrothendieckElem, WeightCanon,
};
pub use fixed::{fundamental_dual_module, fundamental_module, w_module};
pub use standard::{
    highest_weight_vectors, maximal_submodule_generators, quotient, simple_dimension,
    simple_module, simple_qdim, standard_index, standard_module, submodule_generated, Submodule,
};

use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::{LinAlg, Mat, MatOps};
use crate::scalar::{Field, Ring, SymExp};
use crate::uq_rank2::{weight_add, weight_neg, Gen, GroupLike, Weight};

/// Finite-dimensional module with a basis of weight vectors, each carrying a
/// `Lambda`-weight and a `Z`-degree, and exact matrices for the generators.
#[derive(Clone, Debug)]
pub struct WeightModule<R: Ring> {
    ring: R,
    labels: Vec<String>,
    weights: Vec<Weight>,
    degrees: Vec<i64>,
    gens: [Mat<R::Elem>; 4],
}

impl<R: Ring> WeightModule<R> {
    /// Build a module; generator matrices are indexed as [`Gen::ALL`].
    /// Fails unless every generator respects the weight and degree grading.
    pub fn new(
        ring: R,
        labels: Vec<String>,
        weights: Vec<Weight>,
        degrees: Vec<i64>,
        gens: [Mat<R::Elem>; 4],
    ) -> Result<Self> {
        let dim = labels.len();
        if weights.len() != dim || degrees.len() != dim {
            return Err(Error::ModuleIntegrity("basis data lengths differ".into()));
        }
        for g in &gens {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::ModuleIntegrity(
                    "generator matrix has the wrong shape".into(),
                ));
            }
        }
        let weights: Vec<Weight> = weights.iter().map(|w| canon_weight(&ring, w)).collect();
        let m = WeightModule {
            ring,
            labels,
            weights,
            degrees,
            gens,
        };
        m.check_grading()?;
        Ok(m)
    }

    fn check_grading(&self) -> Result<()> {
        for g in Gen::ALL {
            let s = g.weight_shift();
            let shift = [SymExp::constant(s[0]), SymExp::constant(s[1])];
            let mat = &self.gens[g.index()];
            for c in 0..self.dim() {
                let target = canon_weight(&self.ring, &weight_add(&self.weights[c], &shift));
                for r in 0..self.dim() {
                    if self.ring.is_zero(mat.get(r, c)) {
                        continue;
                    }
                    if self.weights[r] != target
                        || self.degrees[r] != self.degrees[c] + g.degree_shift()
                    {
                        return Err(Error::ModuleIntegrity(format!(
                            "{} maps {} to {} against the grading",
                            g.name(),
                            self.labels[c],
                            self.labels[r]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The one-dimensional trivial module.
    pub fn trivial(ring: R) -> Self {
        let z = Mat::zeros(&ring, 1, 1);
        WeightModule {
            labels: vec!["1".into()],
            weights: vec![[SymExp::ZERO; 2]],
            degrees: vec![0],
            gens: [z.clone(), z.clone(), z.clone(), z],
            ring,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn action(&self, g: Gen) -> &Mat<R::Elem> {
        &self.gens[g.index()]
    }

    /// Scalar by which a group-like acts on basis vector `i`.
    pub fn group_scalar(&self, g: &GroupLike, i: usize) -> R::Elem {
        self.ring.q_sym(&g.exponent_on(&self.weights[i]))
    }

    pub fn group_action(&self, g: &GroupLike) -> Mat<R::Elem> {
        let d: Vec<R::Elem> = (0..self.dim()).map(|i| self.group_scalar(g, i)).collect();
        Mat::diagonal(&self.ring, &d)
    }

    /// Diagonal matrix of `kappa_a`.
    pub fn kappa(&self, a: usize) -> Mat<R::Elem> {
        self.group_action(&GroupLike::kappa(a))
    }

    /// `V (x) W` with actions through the coproduct
    /// `x_i -> x_i (x) 1 + gamma_i (x) x_i`, `y_i -> y_i (x) 1 + gamma_bar_i (x) y_i`.
    pub fn tensor(&self, other: &Self) -> Self {
        let r = &self.ring;
        let ib = Mat::identity(r, other.dim());
        let gens = Gen::ALL.map(|g| {
            let i = match g {
                Gen::X1 | Gen::Y1 => 1,
                Gen::X2 | Gen::Y2 => 2,
            };
            let grp = match g {
                Gen::X1 | Gen::X2 => GroupLike::gamma(i),
                Gen::Y1 | Gen::Y2 => GroupLike::gamma_bar(i),
            };
            r.mat_add(
                &r.kron(self.action(g), &ib),
                &r.kron(&self.group_action(&grp), other.action(g)),
            )
        });
        let mut labels = Vec::new();
        let mut weights = Vec::new();
        let mut degrees = Vec::new();
        for a in 0..self.dim() {
            for b in 0..other.dim() {
                labels.push(format!("{}*{}", self.labels[a], other.labels[b]));
                weights.push(canon_weight(
                    r,
                    &weight_add(&self.weights[a], &other.weights[b]),
                ));
                degrees.push(self.degrees[a] + other.degrees[b]);
            }
        }
        WeightModule {
            ring: r.clone(),
            labels,
            weights,
            degrees,
            gens,
        }
    }

    /// Dual module with `(h f)(v) = f(S(h) v)`; basis is the dual basis.
    pub fn dual(&self) -> Self {
        let r = &self.ring;
        let minus = r.from_int(-1);
        let gens = Gen::ALL.map(|g| {
            let grp = match g {
                Gen::X1 => GroupLike::gamma(1),
                Gen::X2 => GroupLike::gamma(2),
                Gen::Y1 => GroupLike::gamma_bar(1),
                Gen::Y2 => GroupLike::gamma_bar(2),
            };
            let s = r.mat_scale(
                &r.mat_mul(&self.group_action(&grp.inverse()), self.action(g)),
                &minus,
            );
            s.transpose()
        });
        WeightModule {
            ring: r.clone(),
            labels: self.labels.iter().map(|l| format!("{l}^*")).collect(),
            weights: self
                .weights
                .iter()
                .map(|w| canon_weight(r, &weight_neg(w)))
                .collect(),
            degrees: self.degrees.iter().map(|d| -d).collect(),
            gens,
        }
    }

    /// Same module on a new basis given by weight-homogeneous column vectors.
    pub fn rebased(&self, basis: &[Vec<R::Elem>], labels: Vec<String>) -> Result<Self>
    where
        R: Field,
    {
        let r = &self.ring;
        let dim = self.dim();
        if basis.len() != dim || labels.len() != dim {
            return Err(Error::ModuleIntegrity(
                "new basis has the wrong size".into(),
            ));
        }
        let p = Mat::from_fn(dim, dim, |i, j| basis[j][i].clone());
        let pinv = r
            .inverse(&p)
            .ok_or_else(|| Error::ModuleIntegrity("new basis is linearly dependent".into()))?;
        let mut weights = Vec::with_capacity(dim);
        let mut degrees = Vec::with_capacity(dim);
        for v in basis {
            let support: Vec<usize> = (0..dim).filter(|&i| !r.is_zero(&v[i])).collect();
            let first = support[0];
            if support.iter().any(|&i| {
                self.weights[i] != self.weights[first] || self.degrees[i] != self.degrees[first]
            }) {
                return Err(Error::ModuleIntegrity(
                    "basis vector is not homogeneous".into(),
                ));
            }
            weights.push(self.weights[first]);
            degrees.push(self.degrees[first]);
        }
        let gens = Gen::ALL.map(|g| r.mat_mul(&pinv, &r.mat_mul(self.action(g), &p)));
        WeightModule::new(r.clone(), labels, weights, degrees, gens)
    }

    /// Residual of every defining relation on this module; empty means all hold.
    pub fn failing_relations(&self) -> Vec<String> {
        let r = &self.ring;
        let [x1, x2, y1, y2] = &self.gens;
        let id = Mat::identity(r, self.dim());
        let mut bad = Vec::new();
        let mut check = |name: &str, m: Mat<R::Elem>| {
            if !r.mat_is_zero(&m) {
                bad.push(name.to_string());
            }
        };
        for (name, g) in [("x1^2", x1), ("x2^2", x2), ("y1^2", y1), ("y2^2", y2)] {
            check(name, r.mat_mul(g, g));
        }
        let anti =
            |a: &Mat<R::Elem>, b: &Mat<R::Elem>| r.mat_add(&r.mat_mul(a, b), &r.mat_mul(b, a));
        check(
            "y1x1+x1y1-(1-k2)",
            r.mat_sub(&anti(y1, x1), &r.mat_sub(&id, &self.kappa(2))),
        );
        check(
            "y2x2+x2y2-(1-k1)",
            r.mat_sub(&anti(y2, x2), &r.mat_sub(&id, &self.kappa(1))),
        );
        check(
            "y2x1-q x1y2",
            r.mat_sub(
                &r.mat_mul(y2, x1),
                &r.mat_scale(&r.mat_mul(x1, y2), &r.q_pow(1)),
            ),
        );
        check(
            "y1x2-x2y1",
            r.mat_sub(&r.mat_mul(y1, x2), &r.mat_mul(x2, y1)),
        );
        if let Some(n) = r.order() {
            let p = |a: &Mat<R::Elem>, b: &Mat<R::Elem>| r.mat_pow(&r.mat_mul(a, b), n);
            check("(x1x2)^N+(x2x1)^N", r.mat_add(&p(x1, x2), &p(x2, x1)));
            check("(y1y2)^N+(y2y1)^N", r.mat_add(&p(y1, y2), &p(y2, y1)));
        }
        bad
    }

    pub fn check_relations(&self) -> Result<()> {
        let bad = self.failing_relations();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::ModuleIntegrity(format!(
                "relations fail: {}",
                bad.join(", ")
            )))
        }
    }

    /// Graded character; the grading variable `t` counts minus the `Z`-degree.
    pub fn character(&self) -> GradedCharacter {
        let mut ch = GradedCharacter::new(WeightCanon::of_ring(&self.ring));
        for i in 0..self.dim() {
            ch.add_term(self.weights[i], -self.degrees[i], 1);
        }
        ch
    }

    /// Quantum dimension `tr(nu)`.
    pub fn qdim(&self) -> R::Elem {
        let nu = GroupLike::nu();
        (0..self.dim()).fold(self.ring.zero(), |acc, i| {
            self.ring.add(&acc, &self.group_scalar(&nu, i))
        })
    }

    /// Basis as JSON records.
    pub fn basis_json(&self) -> serde_json::Value {
        let items: Vec<_> = (0..self.dim())
            .map(|i| {
                json!({
                    "label": self.labels[i],
                    "w1": self.weights[i][0].to_string(),
                    "w2": self.weights[i][1].to_string(),
                    "zdeg": self.degrees[i],
                })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

pub(crate) fn canon_weight<R: Ring>(r: &R, w: &Weight) -> Weight {
    [r.canon(&w[0]), r.canon(&w[1])]
}
