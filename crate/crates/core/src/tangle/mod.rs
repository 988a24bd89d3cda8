//! Oriented tangles coloured by the four-dimensional module `W` and the link
//! invariant obtained by cutting a link open at one strand.

mod coloring;
mod eval;
mod knots;
mod skein;

pub use coloring::{cyclotomic_coloring, symbolic_coloring, Coloring};
pub use eval::{
    braid_endomorphism, cross_check_cyclotomic, invariant_braid, invariant_braid_in,
    invariant_tangle, invariant_tangle_in, tangle_endomorphism,
};
pub use knots::{knot_db, knot_lookup, parse_knot_table, KnotEntry, KnotStatus};
pub use skein::{skein_recursion, skein_verify, torus2_formula, SkeinReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strand orientation; upward strands carry `W`, downward strands `W^*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub(crate) fn index(self) -> usize {
        match self {
            Orient::Up => 0,
            Orient::Down => 1,
        }
    }
}

/// Crossing type, named by the braid generator it realizes on two upward strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossSign {
    Pos,
    Neg,
}

impl CrossSign {
    pub(crate) fn index(self) -> usize {
        match self {
            CrossSign::Pos => 0,
            CrossSign::Neg => 1,
        }
    }
}

/// Creation of a pair of strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CupKind {
    /// `1 -> W (x) W^*`.
    Coev,
    /// `1 -> W^* (x) W`.
    CoevRight,
}

/// Annihilation of a pair of strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CapKind {
    /// `W^* (x) W -> 1`.
    Ev,
    /// `W (x) W^* -> 1`.
    EvRight,
}

/// One elementary piece of a Morse slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Piece {
    Id { id: Orient },
    Cross { x: CrossSign, orient: [Orient; 2] },
    Cup { cup: CupKind },
    Cap { cap: CapKind },
}

impl Piece {
    pub fn inputs(&self) -> Vec<Orient> {
        match *self {
            Piece::Id { id } => vec![id],
            Piece::Cross { orient, .. } => orient.to_vec(),
            Piece::Cup { .. } => vec![],
            Piece::Cap { cap: CapKind::Ev } => vec![Orient::Down, Orient::Up],
            Piece::Cap {
                cap: CapKind::EvRight,
            } => vec![Orient::Up, Orient::Down],
        }
    }

    pub fn outputs(&self) -> Vec<Orient> {
        match *self {
            Piece::Id { id } => vec![id],
            Piece::Cross { orient, .. } => vec![orient[1], orient[0]],
            Piece::Cup { cup: CupKind::Coev } => vec![Orient::Up, Orient::Down],
            Piece::Cup {
                cup: CupKind::CoevRight,
            } => vec![Orient::Down, Orient::Up],
            Piece::Cap { .. } => vec![],
        }
    }

    /// Sign of the crossing in the oriented diagram, zero for other pieces.
    pub fn writhe(&self) -> i64 {
        match *self {
            Piece::Cross { x, orient } => {
                let s = if x == CrossSign::Pos { 1 } else { -1 };
                if orient[0] == orient[1] {
                    s
                } else {
                    -s
                }
            }
            _ => 0,
        }
    }
}

/// A (1,1)-tangle given as horizontal slices of pieces, applied in order.
/// The boundary is a single upward strand at the top and at the bottom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MorseTangle {
    pub slices: Vec<Vec<Piece>>,
}

impl MorseTangle {
    pub fn from_json(s: &str) -> Result<Self> {
        let t: MorseTangle =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("tangle JSON: {e}")))?;
        t.levels()?;
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tangle serializes")
    }

    /// Orientation lists between slices; fails on any arity mismatch.
    pub fn levels(&self) -> Result<Vec<Vec<Orient>>> {
        let mut cur = vec![Orient::Up];
        let mut out = vec![cur.clone()];
        for (k, slice) in self.slices.iter().enumerate() {
            let ins: Vec<Orient> = slice.iter().flat_map(|p| p.inputs()).collect();
            if ins != cur {
                return Err(Error::Arity(format!(
                    "slice {k} expects strands {ins:?} but receives {cur:?}"
                )));
            }
            cur = slice.iter().flat_map(|p| p.outputs()).collect();
            out.push(cur.clone());
        }
        if cur != [Orient::Up] {
            return Err(Error::Arity(format!(
                "tangle ends with strands {cur:?}, expected one upward strand"
            )));
        }
        Ok(out)
    }

    pub fn writhe(&self) -> i64 {
        self.slices.iter().flatten().map(Piece::writhe).sum()
    }

    /// Number of link components of the closure, counting the open strand.
    pub fn components(&self) -> Result<usize> {
        let levels = self.levels()?;
        let mut offsets = Vec::with_capacity(levels.len());
        let mut total = 0;
        for l in &levels {
            offsets.push(total);
            total += l.len();
        }
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            p[ra] = rb;
        };
        for (k, slice) in self.slices.iter().enumerate() {
            let (mut i, mut o) = (offsets[k], offsets[k + 1]);
            for piece in slice {
                match piece {
                    Piece::Id { .. } => union(&mut parent, i, o),
                    Piece::Cross { .. } => {
                        union(&mut parent, i, o + 1);
                        union(&mut parent, i + 1, o);
                    }
                    Piece::Cup { .. } => union(&mut parent, o, o + 1),
                    Piece::Cap { .. } => union(&mut parent, i, i + 1),
                }
                i += piece.inputs().len();
                o += piece.outputs().len();
            }
        }
        let top = find(&mut parent, 0);
        let bottom = find(&mut parent, total - 1);
        if top != bottom {
            return Err(Error::Consistency(
                "open strand does not connect top and bottom".into(),
            ));
        }
        let roots: std::collections::BTreeSet<usize> =
            (0..total).map(|x| find(&mut parent, x)).collect();
        Ok(roots.len())
    }

    /// Mirror image: every crossing changes sign.
    pub fn mirror(&self) -> Self {
        let slices = self
            .slices
            .iter()
            .map(|s| {
                s.iter()
                    .map(|p| match *p {
                        Piece::Cross { x, orient } => Piece::Cross {
                            x: if x == CrossSign::Pos {
                                CrossSign::Neg
                            } else {
                                CrossSign::Pos
                            },
                            orient,
                        },
                        other => other,
                    })
                    .collect()
            })
            .collect();
        MorseTangle { slices }
    }
}

/// A braid word on `strands` strands; generator `i > 0` is `sigma_i`, `-i` its inverse.
/// The closure is cut open at strand `cut` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidSpec {
    pub strands: usize,
    pub word: Vec<i32>,
    #[serde(default)]
    pub cut: usize,
}

impl BraidSpec {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self> {
        Self::with_cut(strands, word, 0)
    }

    pub fn with_cut(strands: usize, word: Vec<i32>, cut: usize) -> Result<Self> {
        let b = BraidSpec { strands, word, cut };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        if self.strands == 0 {
            return Err(Error::Arity("a braid needs at least one strand".into()));
        }
        if self.cut >= self.strands {
            return Err(Error::Arity(format!(
                "cut strand {} out of range",
                self.cut
            )));
        }
        for &g in &self.word {
            if g == 0 || g.unsigned_abs() as usize >= self.strands {
                return Err(Error::Arity(format!(
                    "generator {g} invalid on {} strands",
                    self.strands
                )));
            }
        }
        Ok(())
    }

    /// Parse `"1,1,-2"` style words; whitespace is ignored.
    pub fn parse_word(s: &str) -> Result<Vec<i32>> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|e| Error::Parse(format!("braid generator `{t}`: {e}")))
            })
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|g| g.signum() as i64).sum()
    }

    /// Permutation of strand positions induced by the braid.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        at
    }

    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        count
    }

    pub fn mirror(&self) -> Self {
        BraidSpec {
            strands: self.strands,
            word: self.word.iter().map(|g| -g).collect(),
            cut: self.cut,
        }
    }

    /// Morse presentation of the closure cut at `cut`: strands left of the cut
    /// close to the left, strands right of it close to the right.
    pub fn to_morse(&self) -> Result<MorseTangle> {
        self.validate()?;
        let (k, c) = (self.strands, self.cut);
        let left = c;
        let right = k - c - 1;
        let id = |o| Piece::Id { id: o };
        let up = Orient::Up;
        let down = Orient::Down;
        let mut slices = Vec::new();
        // Left cups, outermost first; each new cup sits between the downward
        // arcs and the upward strands already created.
        for m in 0..left {
            let mut s: Vec<Piece> = (0..m).map(|_| id(down)).collect();
            s.push(Piece::Cup {
                cup: CupKind::CoevRight,
            });
            s.extend((0..m + 1).map(|_| id(up)));
            slices.push(s);
        }
        for m in 0..right {
            let mut s: Vec<Piece> = (0..left).map(|_| id(down)).collect();
            s.extend((0..left + 1 + m).map(|_| id(up)));
            s.push(Piece::Cup { cup: CupKind::Coev });
            s.extend((0..m).map(|_| id(down)));
            slices.push(s);
        }
        for &g in &self.word {
            let i = g.unsigned_abs() as usize - 1;
            let x = if g > 0 {
                CrossSign::Pos
            } else {
                CrossSign::Neg
            };
            let mut s: Vec<Piece> = (0..left).map(|_| id(down)).collect();
            s.extend((0..i).map(|_| id(up)));
            s.push(Piece::Cross {
                x,
                orient: [up, up],
            });
            s.extend((i + 2..k).map(|_| id(up)));
            s.extend((0..right).map(|_| id(down)));
            slices.push(s);
        }
        // Left caps, innermost first.
        for m in (0..left).rev() {
            let mut s: Vec<Piece> = (0..m).map(|_| id(down)).collect();
            s.push(Piece::Cap { cap: CapKind::Ev });
            s.extend((0..m + 1 + right).map(|_| id(up)));
            s.extend((0..right).map(|_| id(down)));
            slices.push(s);
        }
        for m in (0..right).rev() {
            let mut s: Vec<Piece> = (0..1 + m).map(|_| id(up)).collect();
            s.push(Piece::Cap {
                cap: CapKind::EvRight,
            });
            s.extend((0..m).map(|_| id(down)));
            slices.push(s);
        }
        let t = MorseTangle { slices };
        t.levels()?;
        Ok(t)
    }
}
