//! Punctured surfaces presented by ideal triangulations.
//!
//! A surface is stored as a list of oriented triangles; side `i` of a
//! triangle runs counterclockwise and carries a directed edge label. Every
//! edge label appears exactly twice, once forward and once backward, which
//! encodes both the gluing and the orientation. Vertices of the
//! triangulation are the punctures.

use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// One side of a triangle: an edge label plus the direction in which the
/// counterclockwise boundary of the triangle traverses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Side {
    pub edge: usize,
    pub forward: bool,
}

impl Side {
    pub const fn new(edge: usize, forward: bool) -> Self {
        Side { edge, forward }
    }
}

/// A triangle slot: triangle index plus side index 0..3.
pub type Slot = (usize, usize);

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TriangulationData {
    pub genus: usize,
    pub punctures: usize,
    /// Each triangle lists its three sides in counterclockwise order.
    pub triangles: Vec<[Side; 3]>,
}

/// An ideal triangulation of `S_{g,n}` together with derived gluing data.
///
/// Cheap to clone (`Arc` inside); all derived tables are built once at
/// construction and validated against the expected topology.
#[derive(Debug, Clone)]
pub struct Surface {
    inner: Arc<SurfaceInner>,
}

#[derive(Debug)]
struct SurfaceInner {
    name: String,
    genus: usize,
    punctures: usize,
    triangles: Vec<[Side; 3]>,
    num_edges: usize,
    /// partner[t][s] = the slot glued to side s of triangle t.
    partner: Vec<[Slot; 3]>,
    /// vertex_of_corner[t][i] = vertex class of the corner at the start of side i.
    vertex_of_corner: Vec<[usize; 3]>,
    num_vertices: usize,
    /// For each vertex class, the normal coordinates of the curve linking it.
    vertex_links: Vec<Vec<u64>>,
}

impl PartialEq for Surface {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.name == other.inner.name
                && self.inner.triangles == other.inner.triangles)
    }
}
impl Eq for Surface {}

impl Surface {
    pub fn new(name: &str, data: TriangulationData) -> Result<Surface> {
        let TriangulationData {
            genus,
            punctures,
            triangles,
        } = data;
        if punctures == 0 {
            return Err(Error::BadTriangulation(
                "ideal triangulations require at least one puncture".into(),
            ));
        }
        let xi = 3 * genus as i64 - 3 + punctures as i64;
        if xi < 1 {
            return Err(Error::BadTriangulation(format!(
                "complexity {xi} < 1 is unsupported as an ambient surface"
            )));
        }
        let num_tris = triangles.len();
        let expected_tris = 4 * genus + 2 * punctures - 4;
        let expected_edges = 6 * genus + 3 * punctures - 6;
        if num_tris != expected_tris {
            return Err(Error::BadTriangulation(format!(
                "expected {expected_tris} triangles, got {num_tris}"
            )));
        }
        let num_edges = expected_edges;

        // Each edge must appear exactly once forward and once backward,
        // and no triangle may use the same edge on two of its sides.
        let mut fwd: Vec<Option<Slot>> = vec![None; num_edges];
        let mut bwd: Vec<Option<Slot>> = vec![None; num_edges];
        for (t, tri) in triangles.iter().enumerate() {
            let mut used = [usize::MAX; 3];
            for (s, side) in tri.iter().enumerate() {
                if side.edge >= num_edges {
                    return Err(Error::BadTriangulation(format!(
                        "edge label {} out of range",
                        side.edge
                    )));
                }
                if used.contains(&side.edge) {
                    return Err(Error::BadTriangulation(format!(
                        "triangle {t} uses edge {} twice",
                        side.edge
                    )));
                }
                used[s] = side.edge;
                let table = if side.forward { &mut fwd } else { &mut bwd };
                if table[side.edge].is_some() {
                    return Err(Error::BadTriangulation(format!(
                        "edge {} appears twice with the same direction",
                        side.edge
                    )));
                }
                table[side.edge] = Some((t, s));
            }
        }
        for e in 0..num_edges {
            if fwd[e].is_none() || bwd[e].is_none() {
                return Err(Error::BadTriangulation(format!(
                    "edge {e} is not glued on both sides"
                )));
            }
        }
        let mut partner = vec![[(0usize, 0usize); 3]; num_tris];
        for (t, tri) in triangles.iter().enumerate() {
            for (s, side) in tri.iter().enumerate() {
                let other = if side.forward {
                    bwd[side.edge].unwrap()
                } else {
                    fwd[side.edge].unwrap()
                };
                partner[t][s] = other;
            }
        }

        // Vertex classes: corner i of triangle t sits at the start of side i.
        // Rotating around the vertex through side i lands at corner j+1 of
        // the glued triangle, where (t', j) is the partner slot.
        let mut vertex_of_corner = vec![[usize::MAX; 3]; num_tris];
        let mut num_vertices = 0;
        for t in 0..num_tris {
            for i in 0..3 {
                if vertex_of_corner[t][i] != usize::MAX {
                    continue;
                }
                let v = num_vertices;
                num_vertices += 1;
                let (mut ct, mut ci) = (t, i);
                loop {
                    vertex_of_corner[ct][ci] = v;
                    let (pt, ps) = partner[ct][ci];
                    let (nt, ni) = (pt, (ps + 1) % 3);
                    if (nt, ni) == (t, i) {
                        break;
                    }
                    (ct, ci) = (nt, ni);
                }
            }
        }
        if num_vertices != punctures {
            return Err(Error::BadTriangulation(format!(
                "triangulation has {num_vertices} vertices, expected {punctures} punctures"
            )));
        }

        // Vertex links: the loop around vertex v crosses side i of each
        // corner (t, i) in its rotation orbit.
        let mut vertex_links = vec![vec![0u64; num_edges]; num_vertices];
        for (t, tri) in triangles.iter().enumerate() {
            for i in 0..3 {
                let v = vertex_of_corner[t][i];
                vertex_links[v][tri[i].edge] += 1;
            }
        }

        Ok(Surface {
            inner: Arc::new(SurfaceInner {
                name: name.to_string(),
                genus,
                punctures,
                triangles,
                num_edges,
                partner,
                vertex_of_corner,
                num_vertices,
                vertex_links,
            }),
        })
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }
    pub fn genus(&self) -> usize {
        self.inner.genus
    }
    pub fn punctures(&self) -> usize {
        self.inner.punctures
    }
    /// Complexity ξ(S) = 3g - 3 + n.
    pub fn complexity(&self) -> usize {
        3 * self.inner.genus + self.inner.punctures - 3
    }
    pub fn num_edges(&self) -> usize {
        self.inner.num_edges
    }
    pub fn num_triangles(&self) -> usize {
        self.inner.triangles.len()
    }
    pub fn triangles(&self) -> &[[Side; 3]] {
        &self.inner.triangles
    }
    pub fn side(&self, t: usize, s: usize) -> Side {
        self.inner.triangles[t][s]
    }
    pub fn partner(&self, t: usize, s: usize) -> Slot {
        self.inner.partner[t][s]
    }
    pub fn vertex_of_corner(&self, t: usize, i: usize) -> usize {
        self.inner.vertex_of_corner[t][i]
    }
    pub fn num_vertices(&self) -> usize {
        self.inner.num_vertices
    }
    pub fn vertex_links(&self) -> &[Vec<u64>] {
        &self.inner.vertex_links
    }

    pub fn data(&self) -> TriangulationData {
        TriangulationData {
            genus: self.inner.genus,
            punctures: self.inner.punctures,
            triangles: self.inner.triangles.clone(),
        }
    }

    /// Built-in preset by name: "s_1_1", "s_0_4", "s_0_5", "s_1_2",
    /// "s_0_6", "s_1_3".
    pub fn preset(name: &str) -> Result<Surface> {
        match name {
            "s_1_1" | "S_{1,1}" => Surface::s_1_1(),
            "s_0_4" | "S_{0,4}" => Surface::s_0_4(),
            "s_0_5" | "S_{0,5}" => Surface::s_0_5(),
            "s_1_2" | "S_{1,2}" => Surface::s_1_2(),
            "s_0_6" | "S_{0,6}" => Surface::s_0_6(),
            "s_1_3" | "S_{1,3}" => Surface::s_1_3(),
            other => Err(Error::BadTriangulation(format!("unknown preset {other}"))),
        }
    }

    pub fn preset_names() -> &'static [&'static str] {
        &["s_1_1", "s_0_4", "s_0_5", "s_1_2", "s_0_6", "s_1_3"]
    }

    /// Once-punctured torus: two triangles sharing edges a=0, b=1, c=2.
    pub fn s_1_1() -> Result<Surface> {
        let f = |e| Side::new(e, true);
        let b = |e| Side::new(e, false);
        Surface::new(
            "s_1_1",
            TriangulationData {
                genus: 1,
                punctures: 1,
                triangles: vec![[f(0), f(1), f(2)], [b(2), b(0), b(1)]],
            },
        )
    }

    /// Four-punctured sphere: the boundary of a tetrahedron.
    pub fn s_0_4() -> Result<Surface> {
        // vertices 0..4; edges 01,02,03,12,13,23 -> 0..6
        let (e01, e02, e03, e12, e13, e23) = (0, 1, 2, 3, 4, 5);
        let f = |e| Side::new(e, true);
        let b = |e| Side::new(e, false);
        Surface::new(
            "s_0_4",
            TriangulationData {
                genus: 0,
                punctures: 4,
                triangles: vec![
                    [f(e01), f(e12), b(e02)],
                    [f(e02), f(e23), b(e03)],
                    [f(e03), b(e13), b(e01)],
                    [f(e13), b(e23), b(e12)],
                ],
            },
        )
    }

    /// Five-punctured sphere: triangular bipyramid with apexes N, S over
    /// the equator A, B, C.
    pub fn s_0_5() -> Result<Surface> {
        // edges NA,NB,NC,SA,SB,SC,AB,BC,CA -> 0..9
        let (na, nb, nc, sa, sb, sc, ab, bc, ca) = (0, 1, 2, 3, 4, 5, 6, 7, 8);
        let f = |e| Side::new(e, true);
        let b = |e| Side::new(e, false);
        Surface::new(
            "s_0_5",
            TriangulationData {
                genus: 0,
                punctures: 5,
                triangles: vec![
                    [f(na), f(ab), b(nb)],
                    [f(nb), f(bc), b(nc)],
                    [f(nc), f(ca), b(na)],
                    [f(sb), b(ab), b(sa)],
                    [f(sc), b(bc), b(sb)],
                    [f(sa), b(ca), b(sc)],
                ],
            },
        )
    }

    /// Twice-punctured torus: the `s_1_1` triangulation with one triangle
    /// starred at a new vertex.
    pub fn s_1_2() -> Result<Surface> {
        // edges a=0, b=1, c=2, plus cone edges f0=3, f1=4, f2=5
        let f = |e| Side::new(e, true);
        let b = |e| Side::new(e, false);
        Surface::new(
            "s_1_2",
            TriangulationData {
                genus: 1,
                punctures: 2,
                triangles: vec![
                    [f(0), f(1), f(2)],
                    [b(2), b(4), f(3)],
                    [b(0), b(5), f(4)],
                    [b(1), b(3), f(5)],
                ],
            },
        )
    }

    /// Six-punctured sphere: the octahedron.
    pub fn s_0_6() -> Result<Surface> {
        // edges NA,NB,NC,ND,SA,SB,SC,SD,AB,BC,CD,DA -> 0..12
        let (na, nb, nc, nd, sa, sb, sc, sd, ab, bc, cd, da) =
            (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11);
        let f = |e| Side::new(e, true);
        let b = |e| Side::new(e, false);
        Surface::new(
            "s_0_6",
            TriangulationData {
                genus: 0,
                punctures: 6,
                triangles: vec![
                    [f(na), f(ab), b(nb)],
                    [f(nb), f(bc), b(nc)],
                    [f(nc), f(cd), b(nd)],
                    [f(nd), f(da), b(na)],
                    [f(sb), b(ab), b(sa)],
                    [f(sc), b(bc), b(sb)],
                    [f(sd), b(cd), b(sc)],
                    [f(sa), b(da), b(sd)],
                ],
            },
        )
    }

    /// Thrice-punctured torus: `s_1_2` with the remaining original
    /// triangle starred as well.
    pub fn s_1_3() -> Result<Surface> {
        // edges a=0,b=1,c=2, f0..f2=3..6, g0..g2=6..9
        let f = |e| Side::new(e, true);
        let b = |e| Side::new(e, false);
        Surface::new(
            "s_1_3",
            TriangulationData {
                genus: 1,
                punctures: 3,
                triangles: vec![
                    [f(0), b(7), f(6)],
                    [f(1), b(8), f(7)],
                    [f(2), b(6), f(8)],
                    [b(2), b(4), f(3)],
                    [b(0), b(5), f(4)],
                    [b(1), b(3), f(5)],
                ],
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for name in Surface::preset_names() {
            let s = Surface::preset(name).unwrap();
            assert_eq!(s.name(), *name);
            assert!(s.complexity() >= 1);
            // Euler characteristic of the closed surface.
            let chi = s.punctures() as i64 - s.num_edges() as i64 + s.num_triangles() as i64;
            assert_eq!(chi, 2 - 2 * s.genus() as i64, "{name}");
        }
    }

    #[test]
    fn s_0_5_vertex_links() {
        let s = Surface::s_0_5().unwrap();
        assert_eq!(s.num_vertices(), 5);
        // The north apex link crosses NA, NB, NC once each.
        let links = s.vertex_links();
        let north: Vec<u64> = vec![1, 1, 1, 0, 0, 0, 0, 0, 0];
        assert!(links.contains(&north));
    }

    #[test]
    fn s_1_1_single_vertex() {
        let s = Surface::s_1_1().unwrap();
        assert_eq!(s.num_vertices(), 1);
        assert_eq!(s.vertex_links()[0], vec![2, 2, 2]);
    }

    #[test]
    fn closed_surface_rejected() {
        let r = Surface::new(
            "bad",
            TriangulationData {
                genus: 2,
                punctures: 0,
                triangles: vec![],
            },
        );
        assert!(r.is_err());
    }

    #[test]
    fn complexity_zero_rejected() {
        // A sphere with 3 punctures has xi = 0.
        let r = Surface::new(
            "s_0_3",
            TriangulationData {
                genus: 0,
                punctures: 3,
                triangles: vec![
                    [Side::new(0, true), Side::new(1, true), Side::new(2, true)],
                    [
                        Side::new(0, false),
                        Side::new(2, false),
                        Side::new(1, false),
                    ],
                ],
            },
        );
        assert!(r.is_err());
    }
}
