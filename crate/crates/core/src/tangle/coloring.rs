//! Matrices assigned to the elementary pieces when strands carry `W` and `W^*`.

use std::sync::Arc;

use once_cell::sync::OnceCell;

use super::{CapKind, CrossSign, CupKind, Orient, Piece};
use crate::error::{Error, Result};
use crate::linalg::{LinAlg, MatOps, SparseCols};
use crate::repmod::{simple_module, w_module, WeightModule};
use crate::rtcat::{duality_maps, pivotal_diagonal, twist};
use crate::scalar::{CycloField, Field, LaurentInt, LaurentRing, RatFuncField, RatFuncQ, Ring};
use crate::uq_rank2::{r_matrix_braiding, GroupLike};

/// Piece matrices for one colouring module, over a coefficient ring.
#[derive(Clone, Debug)]
pub struct Coloring<R: Ring> {
    ring: R,
    dim: usize,
    /// Indexed by `sign * 4 + orient0 * 2 + orient1`.
    cross: Vec<SparseCols<R::Elem>>,
    cup: [SparseCols<R::Elem>; 2],
    cap: [SparseCols<R::Elem>; 2],
    nu: [Vec<R::Elem>; 2],
    nu_inv: [Vec<R::Elem>; 2],
    theta: R::Elem,
    theta_inv: R::Elem,
}

impl<F: Field> Coloring<F> {
    /// Colouring by `w` and its dual. Requires the twist of `w` to be a scalar.
    pub fn from_module(w: &WeightModule<F>) -> Result<Self> {
        let f = w.ring().clone();
        let d = w.dim();
        let dual = w.dual();
        let mods = [w, &dual];
        let mut cross = Vec::with_capacity(8);
        for sign in [CrossSign::Pos, CrossSign::Neg] {
            for a in 0..2 {
                for b in 0..2 {
                    // Positive crossings are inverse braidings, matching the
                    // right-handed trefoil as the closure of sigma_1^3.
                    let m = match sign {
                        CrossSign::Neg => r_matrix_braiding(mods[a], mods[b])?,
                        CrossSign::Pos => {
                            let psi = r_matrix_braiding(mods[b], mods[a])?;
                            f.inverse(&psi).ok_or_else(|| {
                                Error::Consistency("braiding is not invertible".into())
                            })?
                        }
                    };
                    cross.push(SparseCols::from_dense(&f, &m));
                }
            }
        }
        let maps = duality_maps(w);
        let theta_mat = twist(w)?;
        let theta = f.as_scalar(&theta_mat).ok_or_else(|| {
            Error::BrokenFunctoriality("twist of the colouring module is not a scalar".into())
        })?;
        let theta_inv = f
            .inv(&theta)
            .ok_or_else(|| Error::Consistency("twist is zero".into()))?;
        let nu_inv = |m: &WeightModule<F>| -> Vec<F::Elem> {
            (0..m.dim())
                .map(|i| m.group_scalar(&GroupLike::nu().inverse(), i))
                .collect()
        };
        Ok(Coloring {
            dim: d,
            cross,
            cup: [
                SparseCols::from_dense(&f, &maps.coev),
                SparseCols::from_dense(&f, &maps.coev_right),
            ],
            cap: [
                SparseCols::from_dense(&f, &maps.ev),
                SparseCols::from_dense(&f, &maps.ev_right),
            ],
            nu: [pivotal_diagonal(w), pivotal_diagonal(&dual)],
            nu_inv: [nu_inv(w), nu_inv(&dual)],
            theta,
            theta_inv,
            ring: f,
        })
    }
}

impl Coloring<RatFuncField> {
    /// Same colouring with Laurent polynomial entries; fails if any entry has a denominator.
    pub fn to_laurent(&self) -> Result<Coloring<LaurentRing>> {
        let conv = |x: &RatFuncQ| {
            x.to_laurent().ok_or_else(|| {
                Error::NonIntegral(format!("piece entry {x} is not a Laurent polynomial"))
            })
        };
        let conv_cols = |m: &SparseCols<RatFuncQ>| -> Result<SparseCols<LaurentInt>> {
            Ok(SparseCols {
                rows: m.rows,
                cols: m
                    .cols
                    .iter()
                    .map(|col| {
                        col.iter()
                            .map(|(i, x)| Ok((*i, conv(x)?)))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?,
            })
        };
        let conv_vec = |v: &[RatFuncQ]| v.iter().map(conv).collect::<Result<Vec<_>>>();
        Ok(Coloring {
            ring: LaurentRing,
            dim: self.dim,
            cross: self
                .cross
                .iter()
                .map(conv_cols)
                .collect::<Result<Vec<_>>>()?,
            cup: [conv_cols(&self.cup[0])?, conv_cols(&self.cup[1])?],
            cap: [conv_cols(&self.cap[0])?, conv_cols(&self.cap[1])?],
            nu: [conv_vec(&self.nu[0])?, conv_vec(&self.nu[1])?],
            nu_inv: [conv_vec(&self.nu_inv[0])?, conv_vec(&self.nu_inv[1])?],
            theta: conv(&self.theta)?,
            theta_inv: conv(&self.theta_inv)?,
        })
    }
}

impl<R: Ring> Coloring<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Scalar by which the twist acts on the colouring module.
    pub fn theta(&self) -> &R::Elem {
        &self.theta
    }

    pub fn theta_inv(&self) -> &R::Elem {
        &self.theta_inv
    }

    pub(crate) fn nu(&self, o: Orient) -> &[R::Elem] {
        &self.nu[o.index()]
    }

    pub(crate) fn nu_inv(&self, o: Orient) -> &[R::Elem] {
        &self.nu_inv[o.index()]
    }

    pub(crate) fn crossing(&self, sign: CrossSign, orient: [Orient; 2]) -> &SparseCols<R::Elem> {
        &self.cross[sign.index() * 4 + orient[0].index() * 2 + orient[1].index()]
    }

    /// Sparse matrix of a piece, columns indexed by its packed input digits.
    pub(crate) fn piece(&self, p: &Piece) -> Option<&SparseCols<R::Elem>> {
        match *p {
            Piece::Id { .. } => None,
            Piece::Cross { x, orient } => Some(self.crossing(x, orient)),
            Piece::Cup { cup: CupKind::Coev } => Some(&self.cup[0]),
            Piece::Cup {
                cup: CupKind::CoevRight,
            } => Some(&self.cup[1]),
            Piece::Cap { cap: CapKind::Ev } => Some(&self.cap[0]),
            Piece::Cap {
                cap: CapKind::EvRight,
            } => Some(&self.cap[1]),
        }
    }

    /// `theta^k` for any integer `k`.
    pub fn theta_pow(&self, k: i64) -> R::Elem {
        let base = if k >= 0 { &self.theta } else { &self.theta_inv };
        self.ring.pow(base, k.unsigned_abs() as u32)
    }
}

/// The symbolic colouring by `W = L(n, n + 1)` with Laurent polynomial entries.
pub fn symbolic_coloring() -> Result<Arc<Coloring<LaurentRing>>> {
    static CELL: OnceCell<Arc<Coloring<LaurentRing>>> = OnceCell::new();
    CELL.get_or_try_init(|| {
        let w = w_module(&RatFuncField)?;
        Ok(Arc::new(Coloring::from_module(&w)?.to_laurent()?))
    })
    .cloned()
}

/// Colouring over `Q(zeta_N)` by the simple module `L(n, n + 1)`, `N = 2n`.
pub fn cyclotomic_coloring(order: u32) -> Result<Coloring<CycloField>> {
    let n = (order / 2) as i64;
    let w = simple_module(n, n + 1, order)?;
    if w.dim() != 4 {
        return Err(Error::Domain(format!(
            "L(n, n+1) has dimension {} at N = {order}",
            w.dim()
        )));
    }
    Coloring::from_module(&w)
}
