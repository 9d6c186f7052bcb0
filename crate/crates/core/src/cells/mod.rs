//! Kazhdan-Lusztig preorders and cells of `S_n`.
//!
//! `x <=_L y` when `b_y` occurs in `h b_x` for some `h` (left ideal
//! generated by `b_x`), `x <=_R y` when it occurs in `b_x h`, and `<=_J` is
//! generated by both. With this orientation the identity is the minimum and
//! `w_0` the maximum of each preorder, and `x <=_J y` iff the RSK shape of
//! `y` is dominated by that of `x`.

mod rsk;

use std::fmt::Write as _;
use std::sync::Arc;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use crate::coxeter::{BitRow, Partition, Side, SymmetricGroup};
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::kl::KLTable;

pub use rsk::{robinson_schensted, Tableau};

/// Which preorder to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    Left,
    Right,
    TwoSided,
}

#[derive(Debug)]
struct Preorder {
    cell_of: Vec<u32>,
    cells: Vec<Vec<usize>>,
    /// `reach[x] = {y : x <= y}`
    reach: Vec<BitRow>,
}

impl Preorder {
    fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut graph = DiGraph::<(), ()>::with_capacity(order, edges.len());
        let nodes: Vec<_> = (0..order).map(|_| graph.add_node(())).collect();
        for &(a, b) in edges {
            graph.add_edge(nodes[a], nodes[b], ());
        }
        // tarjan_scc yields components in reverse topological order, so every
        // successor component is finished before its predecessors.
        let sccs = tarjan_scc(&graph);
        let mut comp = vec![0u32; order];
        for (c, scc) in sccs.iter().enumerate() {
            for node in scc {
                comp[node.index()] = c as u32;
            }
        }
        let mut comp_reach: Vec<BitRow> = Vec::with_capacity(sccs.len());
        for scc in &sccs {
            let c = comp_reach.len();
            let mut row = BitRow::new(order);
            for node in scc {
                row.set(node.index());
            }
            for node in scc {
                for succ in graph.neighbors(*node) {
                    let sc = comp[succ.index()] as usize;
                    if sc != c {
                        let other = comp_reach[sc].clone();
                        row.union_with(&other);
                    }
                }
            }
            comp_reach.push(row);
        }

        // Renumber cells by their smallest member so ids are deterministic.
        let mut cells: Vec<Vec<usize>> = sccs
            .iter()
            .map(|scc| {
                let mut members: Vec<usize> = scc.iter().map(|n| n.index()).collect();
                members.sort_unstable();
                members
            })
            .collect();
        let mut order_of: Vec<usize> = (0..cells.len()).collect();
        order_of.sort_by_key(|&c| cells[c][0]);
        let mut cell_of = vec![0u32; order];
        let mut sorted_cells = Vec::with_capacity(cells.len());
        for (new_id, &old) in order_of.iter().enumerate() {
            let members = std::mem::take(&mut cells[old]);
            for &m in &members {
                cell_of[m] = new_id as u32;
            }
            sorted_cells.push(members);
        }
        let reach = (0..order).map(|x| comp_reach[comp[x] as usize].clone()).collect();
        Preorder {
            cell_of,
            cells: sorted_cells,
            reach,
        }
    }
}

/// Cell structure of `S_n` derived from the Hecke algebra and validated
/// against the Robinson-Schensted correspondence.
#[derive(Debug)]
pub struct CellData {
    group: Arc<SymmetricGroup>,
    kl: Arc<KLTable>,
    left: Preorder,
    right: Preorder,
    two_sided: Preorder,
    duflo_left: Vec<usize>,
    duflo_right: Vec<usize>,
    p_tableaux: Vec<Tableau>,
    q_tableaux: Vec<Tableau>,
    shapes: Vec<Partition>,
}

impl CellData {
    /// Builds all three preorders from the generator products `b_s b_u` and
    /// `b_u b_s`, then checks that the resulting cells are exactly the
    /// RSK classes: right cells share the insertion tableau, left cells the
    /// recording tableau, two-sided cells the shape.
    pub fn build(kl: Arc<KLTable>) -> Result<Self> {
        let group = kl.group().clone();
        let n = group.rank();
        if !(2..=crate::coxeter::MAX_DENSE_RANK).contains(&n) {
            return Err(Error::RankOutOfRange {
                rank: n,
                min: 2,
                max: crate::coxeter::MAX_DENSE_RANK,
            });
        }
        let hecke = HeckeAlgebra::new(kl.clone());
        let order = group.order();
        let mut left_edges = Vec::new();
        let mut right_edges = Vec::new();
        for u in 0..order {
            for s in group.generators() {
                for (z, _) in hecke.mul_generator_kl(s, u, Side::Left) {
                    if z != u {
                        left_edges.push((u, z));
                    }
                }
                for (z, _) in hecke.mul_generator_kl(s, u, Side::Right) {
                    if z != u {
                        right_edges.push((u, z));
                    }
                }
            }
        }
        let mut both = left_edges.clone();
        both.extend_from_slice(&right_edges);

        let left = Preorder::from_edges(order, &left_edges);
        let right = Preorder::from_edges(order, &right_edges);
        let two_sided = Preorder::from_edges(order, &both);

        let (p_tableaux, q_tableaux): (Vec<_>, Vec<_>) = group.elements().iter().map(robinson_schensted).unzip();
        let shapes: Vec<Partition> = p_tableaux.iter().map(Tableau::shape).collect();

        let duflo = |pre: &Preorder, kind: &str| -> Result<Vec<usize>> {
            pre.cells
                .iter()
                .map(|members| {
                    let invs: Vec<usize> = members.iter().copied().filter(|&w| group.is_involution(w)).collect();
                    match invs.as_slice() {
                        [d] => Ok(*d),
                        _ => Err(Error::Precondition(format!(
                            "{kind} cell {:?} has {} involutions",
                            members,
                            invs.len()
                        ))),
                    }
                })
                .collect()
        };
        let duflo_left = duflo(&left, "left")?;
        let duflo_right = duflo(&right, "right")?;

        let data = CellData {
            group,
            kl,
            left,
            right,
            two_sided,
            duflo_left,
            duflo_right,
            p_tableaux,
            q_tableaux,
            shapes,
        };
        data.check_against_rsk()?;
        Ok(data)
    }

    pub fn new(n: usize) -> Result<Self> {
        CellData::build(Arc::new(KLTable::new(n)?))
    }

    /// Compares the Hecke-derived partitions with the RSK partitions.
    pub fn check_against_rsk(&self) -> Result<()> {
        fn same_partition<K: PartialEq + Ord>(pre: &Preorder, keys: &[K]) -> bool {
            let constant = pre.cells.iter().all(|c| c.iter().all(|&w| keys[w] == keys[c[0]]));
            let mut reps: Vec<&K> = pre.cells.iter().map(|c| &keys[c[0]]).collect();
            let before = reps.len();
            reps.sort();
            reps.dedup();
            constant && reps.len() == before
        }
        if !same_partition(&self.right, &self.p_tableaux) {
            return Err(Error::Precondition(
                "right cells differ from insertion-tableau classes".into(),
            ));
        }
        if !same_partition(&self.left, &self.q_tableaux) {
            return Err(Error::Precondition(
                "left cells differ from recording-tableau classes".into(),
            ));
        }
        if !same_partition(&self.two_sided, &self.shapes) {
            return Err(Error::Precondition("two-sided cells differ from RSK shapes".into()));
        }
        Ok(())
    }

    fn preorder(&self, kind: CellKind) -> &Preorder {
        match kind {
            CellKind::Left => &self.left,
            CellKind::Right => &self.right,
            CellKind::TwoSided => &self.two_sided,
        }
    }

    pub fn group(&self) -> &Arc<SymmetricGroup> {
        &self.group
    }

    pub fn kl(&self) -> &Arc<KLTable> {
        &self.kl
    }

    pub fn cells(&self, kind: CellKind) -> &[Vec<usize>] {
        &self.preorder(kind).cells
    }

    pub fn cell_id(&self, w: usize, kind: CellKind) -> usize {
        self.preorder(kind).cell_of[w] as usize
    }

    /// Members of the cell of `w`, in length-then-lex order.
    pub fn cell_members(&self, w: usize, kind: CellKind) -> &[usize] {
        let pre = self.preorder(kind);
        &pre.cells[pre.cell_of[w] as usize]
    }

    pub fn right_cell_members(&self, w: usize) -> &[usize] {
        self.cell_members(w, CellKind::Right)
    }

    pub fn left_cell_members(&self, w: usize) -> &[usize] {
        self.cell_members(w, CellKind::Left)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize, kind: CellKind) -> bool {
        self.preorder(kind).reach[x].get(y)
    }

    pub fn leq_left(&self, x: usize, y: usize) -> bool {
        self.leq(x, y, CellKind::Left)
    }

    pub fn leq_right(&self, x: usize, y: usize) -> bool {
        self.leq(x, y, CellKind::Right)
    }

    pub fn leq_two_sided(&self, x: usize, y: usize) -> bool {
        self.leq(x, y, CellKind::TwoSided)
    }

    pub fn equivalent(&self, x: usize, y: usize, kind: CellKind) -> bool {
        self.cell_id(x, kind) == self.cell_id(y, kind)
    }

    /// The unique involution in the left (`Side::Left`) or right cell of `w`.
    pub fn duflo_involution(&self, w: usize, side: Side) -> usize {
        match side {
            Side::Left => self.duflo_left[self.left.cell_of[w] as usize],
            Side::Right => self.duflo_right[self.right.cell_of[w] as usize],
        }
    }

    /// The unique element of the left cell of `y` of the form `d w_0` with
    /// `d` an involution.
    pub fn left_cell_i_prime(&self, y: usize) -> usize {
        let w0 = self.group.longest();
        let yw0 = self.group.multiply(y, w0);
        let d = self.duflo_involution(yw0, Side::Left);
        self.group.multiply(d, w0)
    }

    /// Whether `w = d w_0` for an involution `d`.
    pub fn is_i_prime(&self, w: usize) -> bool {
        self.group.is_involution(self.group.multiply(w, self.group.longest()))
    }

    pub fn shape(&self, w: usize) -> &Partition {
        &self.shapes[w]
    }

    pub fn insertion_tableau(&self, w: usize) -> &Tableau {
        &self.p_tableaux[w]
    }

    pub fn recording_tableau(&self, w: usize) -> &Tableau {
        &self.q_tableaux[w]
    }

    /// `sum_i binom(conj_i, 2)` for the RSK shape of `w`.
    pub fn a_value(&self, w: usize) -> usize {
        self.shapes[w].a_value()
    }

    /// The two-sided cell with the given shape, if any.
    pub fn two_sided_cell_of_shape(&self, shape: &Partition) -> Option<&[usize]> {
        self.two_sided
            .cells
            .iter()
            .find(|c| &self.shapes[c[0]] == shape)
            .map(Vec::as_slice)
    }

    /// Number of right cells contained in the two-sided cell with `shape`.
    pub fn right_cells_in(&self, shape: &Partition) -> usize {
        self.right.cells.iter().filter(|c| &self.shapes[c[0]] == shape).count()
    }

    pub fn involutions(&self) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&w| self.group.is_involution(w))
            .collect()
    }

    pub fn report(&self) -> CellReport {
        let g = &self.group;
        let member = |w: usize| CellMember {
            word: g.element(w).word_string(),
            one_line: g.element(w).one_line_string(),
        };
        let side_entries = |kind: CellKind| -> Vec<CellEntry> {
            self.cells(kind)
                .iter()
                .enumerate()
                .map(|(i, members)| CellEntry {
                    index: i,
                    members: members.iter().map(|&w| member(w)).collect(),
                    duflo: match kind {
                        CellKind::Left => Some(member(self.duflo_left[i])),
                        CellKind::Right => Some(member(self.duflo_right[i])),
                        CellKind::TwoSided => None,
                    },
                    shape: self.shapes[members[0]].to_string(),
                    a_value: self.a_value(members[0]),
                })
                .collect()
        };
        CellReport {
            rank: g.rank(),
            left: side_entries(CellKind::Left),
            right: side_entries(CellKind::Right),
            two_sided: side_entries(CellKind::TwoSided),
        }
    }

    /// Graphviz rendering of the mu-graph on one two-sided cell.
    pub fn mu_graph_dot(&self, two_sided_cell: usize) -> String {
        let g = &self.group;
        let members = &self.two_sided.cells[two_sided_cell];
        let mut out = String::new();
        let shape = &self.shapes[members[0]];
        writeln!(out, "graph \"cell_{}\" {{", shape).unwrap();
        writeln!(out, "  label=\"two-sided cell {shape}\";").unwrap();
        for &w in members {
            writeln!(out, "  n{w} [label=\"{}\"];", g.element(w).word_string()).unwrap();
        }
        for &y in members {
            for (z, m) in self.kl.mu_below(y) {
                if self.two_sided.cell_of[z] == self.two_sided.cell_of[y] {
                    if m == 1 {
                        writeln!(out, "  n{z} -- n{y};").unwrap();
                    } else {
                        writeln!(out, "  n{z} -- n{y} [label=\"{m}\"];").unwrap();
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CellMember {
    pub word: String,
    pub one_line: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellEntry {
    pub index: usize,
    pub members: Vec<CellMember>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duflo: Option<CellMember>,
    pub shape: String,
    pub a_value: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellReport {
    pub rank: usize,
    pub left: Vec<CellEntry>,
    pub right: Vec<CellEntry>,
    pub two_sided: Vec<CellEntry>,
}
