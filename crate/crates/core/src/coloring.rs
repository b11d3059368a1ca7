//! Regular colorings: vertex colorings with pairwise-distinct colors on
//! every face, i.e. non-degenerate simplicial maps to a simplex.
//!
//! Faces induce complete subgraphs of the 1-skeleton, so a coloring is
//! regular exactly when it is proper on the edges. The search is exhaustive
//! backtracking over vertices in decreasing 1-skeleton degree, first-fit on
//! colors, so the first solution is deterministic.

use crate::classes::{Sign, SignFunction, VertexSigns};
use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poly::SrPolynomial;
use crate::structures::induced_sign_function;

/// A vertex coloring into the palette `{1, ..., r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    r: u32,
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(r: u32, colors: Vec<u32>) -> Result<Self> {
        if colors.iter().any(|&c| c == 0 || c > r) {
            return Err(Error::InvalidInput(format!(
                "colors must lie in 1..={r}"
            )));
        }
        Ok(Coloring { r, colors })
    }

    /// Palette size `r`.
    pub fn palette(&self) -> u32 {
        self.r
    }

    /// Color of vertex `v` (1-based).
    pub fn color(&self, v: u32) -> u32 {
        self.colors[(v - 1) as usize]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }
}

fn adjacency(complex: &SimplicialComplex) -> Vec<FaceSet> {
    let m = complex.m() as usize;
    let mut adj = vec![FaceSet::EMPTY; m];
    for edge in complex.faces_of_card(2) {
        let vs = edge.vertices();
        adj[(vs[0] - 1) as usize] = adj[(vs[0] - 1) as usize].with(vs[1]);
        adj[(vs[1] - 1) as usize] = adj[(vs[1] - 1) as usize].with(vs[0]);
    }
    adj
}

/// Checks pairwise-distinct colors on every face (equivalently on the
/// facets, since any repeat inside a face is a repeat inside some facet).
pub fn is_valid_coloring(complex: &SimplicialComplex, coloring: &Coloring) -> Result<()> {
    if coloring.colors.len() != complex.m() as usize {
        return Err(Error::PaletteSize {
            got: coloring.colors.len(),
            expected: complex.m() as usize,
        });
    }
    for facet in complex.facets() {
        let mut seen = 0u64;
        for v in facet.iter() {
            let c = coloring.color(v);
            if seen >> (c - 1) & 1 == 1 {
                return Err(Error::DegenerateColoring(*facet));
            }
            seen |= 1 << (c - 1);
        }
    }
    Ok(())
}

/// Searches for a regular `r`-coloring; `None` when none exists.
pub fn find_coloring(complex: &SimplicialComplex, r: u32) -> Option<Coloring> {
    let m = complex.m() as usize;
    if r == 0 {
        return None;
    }
    let adj = adjacency(complex);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(adj[i].card()), i));
    let mut colors = vec![0u32; m];
    if backtrack(&adj, &order, 0, r, &mut colors) {
        Coloring::new(r, colors).ok()
    } else {
        None
    }
}

fn backtrack(adj: &[FaceSet], order: &[usize], pos: usize, r: u32, colors: &mut [u32]) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    'colors: for c in 1..=r {
        for u in adj[v].iter() {
            if colors[(u - 1) as usize] == c {
                continue 'colors;
            }
        }
        colors[v] = c;
        if backtrack(adj, order, pos + 1, r, colors) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

/// Least `r` admitting a regular coloring; at least `n`, at most `m`.
pub fn chromatic_number(complex: &SimplicialComplex) -> Result<u32> {
    if complex.active_vertices().is_empty() {
        return Err(Error::NoVertices);
    }
    let mut r = complex.n().max(1);
    loop {
        if find_coloring(complex, r).is_some() {
            return Ok(r);
        }
        r += 1;
        debug_assert!(r <= complex.m(), "the inclusion into the full simplex colors K");
    }
}

/// First Chern classes of the line-bundle factors induced by a coloring:
/// `u_i = Σ_{g(j) = i} v_j` for each color `i`. Their product recovers the
/// total Chern class: same-color vertices are never jointly a face, so all
/// repeated-color cross terms die in `Z[K]`.
pub fn splitting_factors(
    complex: &SimplicialComplex,
    coloring: &Coloring,
) -> Result<Vec<SrPolynomial>> {
    is_valid_coloring(complex, coloring)?;
    let m = complex.m() as usize;
    (1..=coloring.palette())
        .map(|color| {
            SrPolynomial::from_terms(
                complex,
                (1..=complex.m()).filter(|&v| coloring.color(v) == color).map(|v| {
                    let mut exps = vec![0u32; m];
                    exps[(v - 1) as usize] = 1;
                    (1i64, exps)
                }),
            )
        })
        .collect()
}

/// The sign function `ω_{f∘g}` induced by palette signs `f: {1,...,n} -> ±1`
/// through an `n`-coloring `g`. Every top face carries all `n` colors, so
/// the result is the constant `ε = prod_i f(i)`.
pub fn induced_euler_signs(
    complex: &SimplicialComplex,
    coloring: &Coloring,
    palette_signs: &[Sign],
) -> Result<SignFunction> {
    if coloring.palette() != complex.n() {
        return Err(Error::PaletteSize {
            got: coloring.palette() as usize,
            expected: complex.n() as usize,
        });
    }
    if palette_signs.len() != complex.n() as usize {
        return Err(Error::SignLength {
            got: palette_signs.len(),
            expected: complex.n() as usize,
        });
    }
    is_valid_coloring(complex, coloring)?;
    let vertex_signs = VertexSigns::new(
        (1..=complex.m())
            .map(|v| palette_signs[(coloring.color(v) - 1) as usize])
            .collect(),
    );
    induced_sign_function(complex, &vertex_signs)
}

/// The vertex sign map `f ∘ g` itself.
pub fn composed_vertex_signs(coloring: &Coloring, palette_signs: &[Sign]) -> VertexSigns {
    VertexSigns::new(
        coloring
            .colors()
            .iter()
            .map(|&c| palette_signs[(c - 1) as usize])
            .collect(),
    )
}
