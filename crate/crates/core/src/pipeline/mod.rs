//! Reduction pipeline for the question whether `theta_x L(y)` is
//! indecomposable or zero.
//!
//! Pairs are first moved to normal form `x` an involution, `y w_0` an
//! involution. The direct rules then run in a fixed order: the two-sided
//! prefilter, the closed-form base cases, parabolic descent, and the same
//! base cases and descent on the Koszul-Ringel dual pair. Survivors are put
//! in a canonical duality orientation and form the direct residual list.
//! Each survivor then goes through the exact vanishing test, the diagram
//! symmetry, the move to shortest cell representatives, and the wall-crossing
//! rewrite of a factorized `theta_x`. What is left is the hard residual list.

pub mod golden;
pub mod report;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

pub use report::{PipelineReport, ResidualReport, StepReport, Summary, TraceReport};

use crate::cells::{CellData, CellKind};
use crate::characters::CategoryO;
use crate::coxeter::{coset_decompose, longest_element, GenSet, Permutation, Side, MAX_DENSE_RANK};
use crate::error::{Error, Result};
use crate::kl::KLTable;

/// `(x, y)` as dense indices of the group of the rank in question.
pub type Pair = (usize, usize);

/// Registered reduction rules, listed in priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Normalize,
    TwoSidedPrefilter,
    LongestParabolic,
    DualLongestParabolic,
    SameTwoSidedCell,
    DualLongestRightCell,
    ParabolicDescent,
    DualityFlip,
    ExactVanishing,
    DiagramSymmetry,
    ShortestForm,
    WallCrossingRewrite,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Normalize => "normalize",
            Rule::TwoSidedPrefilter => "two_sided_prefilter",
            Rule::LongestParabolic => "longest_parabolic",
            Rule::DualLongestParabolic => "dual_longest_parabolic",
            Rule::SameTwoSidedCell => "same_two_sided_cell",
            Rule::DualLongestRightCell => "dual_longest_right_cell",
            Rule::ParabolicDescent => "parabolic_descent",
            Rule::DualityFlip => "duality_flip",
            Rule::ExactVanishing => "exact_vanishing",
            Rule::DiagramSymmetry => "diagram_symmetry",
            Rule::ShortestForm => "shortest_form",
            Rule::WallCrossingRewrite => "wall_crossing_rewrite",
        }
    }

    /// The fact the rule rests on.
    pub fn citation(self) -> &'static str {
        match self {
            Rule::Normalize => {
                "f is constant on right cell of x times left cell of y; Duflo involution and d*w0 representatives"
            }
            Rule::TwoSidedPrefilter => "theta_x L(y) != 0 implies x <=_J y",
            Rule::LongestParabolic => "x = w0^J: theta_x L(y) is indecomposable or zero",
            Rule::DualLongestParabolic => "y = w0^J w0: theta_x L(y) is indecomposable or zero",
            Rule::SameTwoSidedCell => "type A, x ~_J y: theta_x L(y) is indecomposable or zero",
            Rule::DualLongestRightCell => "y an involution with y ~_R w0^J w0: theta_x L(y) is indecomposable or zero",
            Rule::ParabolicDescent => {
                "x in W_J, y = z u with z shortest in y W_J: reduce to theta_x L(u) for the Levi factor"
            }
            Rule::DualityFlip => "Koszul-Ringel duality: f(x, y) = f(y^-1 w0, w0 x^-1)",
            Rule::ExactVanishing => "theta_x L(y) != 0 iff x <=_R y^-1",
            Rule::DiagramSymmetry => "conjugation by w0 is induced by the diagram automorphism",
            Rule::ShortestForm => "cell invariance of f; shortest elements of the right cell of x and left cell of y",
            Rule::WallCrossingRewrite => "theta_t theta_s L(y) = theta_t L(ys) if yst < ys, else theta_t L(yt)",
        }
    }
}

/// Final classification of a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    Zero,
    ResolvedIndecomposable {
        rule: Rule,
    },
    /// Settled by the listed Levi factors, all of which resolve.
    ReducedToRank {
        ranks: Vec<usize>,
        components: Vec<(String, String)>,
    },
    ResidualHard {
        label: Option<String>,
    },
}

impl Status {
    pub fn kind(&self) -> &'static str {
        match self {
            Status::Zero => "zero",
            Status::ResolvedIndecomposable { .. } => "resolved_indecomposable",
            Status::ReducedToRank { .. } => "reduced_to_rank",
            Status::ResidualHard { .. } => "residual_hard",
        }
    }

    pub fn is_residual(&self) -> bool {
        matches!(self, Status::ResidualHard { .. })
    }
}

/// Result of one step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pair(Pair),
    Verdict(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub before: Pair,
    pub after: Outcome,
}

/// A pair that reached the hard stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HardCase {
    pub label: Option<String>,
    /// Shortest representatives of the cells.
    pub pair: Pair,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub rank: usize,
    pub original: Pair,
    pub steps: Vec<Step>,
    pub status: Status,
    /// Canonically oriented survivor of the direct rules, with its label.
    pub direct: Option<(Pair, Option<String>)>,
    pub hard: Option<HardCase>,
}

/// A wall-crossing rewrite of `theta_x L(y)` along a reduced word of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    /// Reduced word of `x` in application order; its generator product is
    /// `b_x`.
    pub word: Vec<usize>,
    /// `(s, t, pair before, pair after)` for each collapse.
    pub moves: Vec<(usize, usize, Pair, Pair)>,
    pub result: Pair,
}

/// One entry of a residual list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualCase {
    pub label: Option<String>,
    pub pair: Pair,
    pub status: Status,
    pub verdict: String,
}

struct Level {
    category: CategoryO,
    verdicts: HashMap<Pair, Status>,
    direct_golden: BTreeMap<Pair, String>,
    hard_golden: BTreeMap<Pair, String>,
}

/// Pipeline for `S_n`, holding resolved verdicts for all smaller ranks.
pub struct Pipeline {
    rank: usize,
    levels: BTreeMap<usize, Level>,
}

fn golden_map(cells: &CellData, rows: &[(&str, &str, &str)]) -> Result<BTreeMap<Pair, String>> {
    let g = cells.group();
    rows.iter()
        .map(|&(label, x, y)| Ok(((g.parse(x)?, g.parse(y)?), label.to_string())))
        .collect()
}

impl Pipeline {
    /// Builds cells for every rank `2..=n` and scans the smaller ranks.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_tables(n, |k| KLTable::new(k).map(Arc::new))
    }

    /// As [`Pipeline::new`], taking the KL table of each rank from `table`.
    pub fn with_tables(n: usize, mut table: impl FnMut(usize) -> Result<Arc<KLTable>>) -> Result<Self> {
        if !(2..=MAX_DENSE_RANK).contains(&n) {
            return Err(Error::RankOutOfRange {
                rank: n,
                min: 2,
                max: MAX_DENSE_RANK,
            });
        }
        let mut pipeline = Pipeline {
            rank: n,
            levels: BTreeMap::new(),
        };
        for k in 2..=n {
            let cells = Arc::new(CellData::build(table(k)?)?);
            let (direct_golden, hard_golden) = if k == 6 {
                (
                    golden_map(&cells, &golden::DIRECT_RESIDUALS_S6)?,
                    golden_map(&cells, &golden::HARD_RESIDUALS_S6)?,
                )
            } else {
                (BTreeMap::new(), BTreeMap::new())
            };
            let level = Level {
                category: CategoryO::new(cells),
                verdicts: HashMap::new(),
                direct_golden,
                hard_golden,
            };
            pipeline.levels.insert(k, level);
            if k < n {
                let verdicts: HashMap<Pair, Status> = pipeline
                    .scan_rank(k)
                    .into_iter()
                    .map(|t| (t.original, t.status))
                    .collect();
                pipeline.levels.get_mut(&k).expect("level inserted above").verdicts = verdicts;
            }
        }
        Ok(pipeline)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cells(&self) -> &Arc<CellData> {
        self.level(self.rank).category.cells()
    }

    pub fn category(&self) -> &CategoryO {
        &self.level(self.rank).category
    }

    fn level(&self, k: usize) -> &Level {
        &self.levels[&k]
    }

    /// `(x', y')` with `x'` the Duflo involution of the right cell of `x`
    /// and `y'` the element of the left cell of `y` of the form `d w_0`.
    pub fn normalize_pair(&self, x: usize, y: usize) -> Pair {
        normalize_at(self.cells(), x, y)
    }

    /// `(y^-1 w_0, w_0 x^-1)`.
    pub fn duality_flip(&self, x: usize, y: usize) -> Pair {
        duality_flip_at(self.cells(), x, y)
    }

    /// Closed-form cases, each giving indecomposable or zero.
    pub fn base_case(&self, x: usize, y: usize) -> Option<Rule> {
        base_case_at(self.cells(), x, y)
    }

    /// Levi factors `(x_i, u_i)` of `(x, y)` when `supp(x)` is proper.
    pub fn parabolic_components(&self, x: usize, y: usize) -> Option<Vec<(Permutation, Permutation)>> {
        parabolic_components_at(self.cells(), x, y)
    }

    /// Collapses the leading generator pairs of `word` against `y` while the
    /// wall-crossing rule applies and every shortened word still multiplies
    /// to a KL basis element.
    pub fn wall_crossing_rewrite(&self, x: usize, y: usize, word: &[usize]) -> Result<Rewrite> {
        rewrite_at(&self.level(self.rank).category, x, y, word)
    }

    /// All normalized pairs `x` in `I(W)`, `y` in `I'(W)` with their traces.
    pub fn scan(&self) -> Vec<ReductionTrace> {
        self.scan_rank(self.rank)
    }

    fn scan_rank(&self, k: usize) -> Vec<ReductionTrace> {
        let cells = self.level(k).category.cells();
        let g = cells.group();
        let w0 = g.longest();
        let involutions = cells.involutions();
        let pairs: Vec<Pair> = involutions
            .iter()
            .flat_map(|&x| involutions.iter().map(move |&d| (x, g.multiply(d, w0))))
            .collect();
        pairs.par_iter().map(|&(x, y)| self.trace_at(k, x, y)).collect()
    }

    /// Trace of an arbitrary pair of the top rank.
    pub fn trace(&self, x: usize, y: usize) -> ReductionTrace {
        self.trace_at(self.rank, x, y)
    }

    /// Distinct canonically oriented survivors of the direct rules.
    pub fn direct_residuals(&self, traces: &[ReductionTrace]) -> Vec<ResidualCase> {
        let mut out: BTreeMap<Pair, ResidualCase> = BTreeMap::new();
        for t in traces {
            if let Some((pair, label)) = &t.direct {
                if *pair == t.original {
                    out.insert(
                        *pair,
                        ResidualCase {
                            label: label.clone(),
                            pair: *pair,
                            status: t.status.clone(),
                            verdict: verdict_of(t),
                        },
                    );
                }
            }
        }
        out.into_values().collect()
    }

    /// Distinct pairs reaching the hard stage, in shortest form.
    pub fn residual_cases(&self, traces: &[ReductionTrace]) -> Vec<ResidualCase> {
        let mut out: BTreeMap<Pair, ResidualCase> = BTreeMap::new();
        for t in traces {
            if let Some(h) = &t.hard {
                out.entry(h.pair).or_insert_with(|| ResidualCase {
                    label: h.label.clone(),
                    pair: h.pair,
                    status: t.status.clone(),
                    verdict: h.verdict.clone(),
                });
            }
        }
        out.into_values().collect()
    }

    /// Compares both residual lists with the expected ones for this rank.
    /// Returns human-readable differences; empty means agreement.
    pub fn golden_diff(&self, traces: &[ReductionTrace]) -> Vec<String> {
        let level = self.level(self.rank);
        let g = level.category.group();
        let show = |p: &Pair| format!("({}, {})", g.element(p.0).word_string(), g.element(p.1).word_string());
        let mut diffs = Vec::new();
        let mut compare = |what: &str, got: Vec<ResidualCase>, expected: &BTreeMap<Pair, String>| {
            let got: BTreeMap<Pair, Option<String>> = got.into_iter().map(|c| (c.pair, c.label)).collect();
            for (p, label) in expected {
                if !got.contains_key(p) {
                    diffs.push(format!("{what}: missing {label} {}", show(p)));
                }
            }
            for p in got.keys() {
                if !expected.contains_key(p) {
                    diffs.push(format!("{what}: unexpected {}", show(p)));
                }
            }
        };
        compare("direct", self.direct_residuals(traces), &level.direct_golden);
        compare("hard", self.residual_cases(traces), &level.hard_golden);
        diffs
    }

    fn trace_at(&self, k: usize, x0: usize, y0: usize) -> ReductionTrace {
        let level = self.level(k);
        let cells = level.category.cells();
        let g = cells.group();
        let mut steps = Vec::new();
        let finish = |steps: Vec<Step>, status: Status, direct, hard| ReductionTrace {
            rank: k,
            original: (x0, y0),
            steps,
            status,
            direct,
            hard,
        };

        let (x, y) = normalize_at(cells, x0, y0);
        if (x, y) != (x0, y0) {
            steps.push(Step {
                rule: Rule::Normalize,
                before: (x0, y0),
                after: Outcome::Pair((x, y)),
            });
        }
        if !cells.leq_two_sided(x, y) {
            steps.push(Step {
                rule: Rule::TwoSidedPrefilter,
                before: (x, y),
                after: Outcome::Verdict("zero".into()),
            });
            return finish(steps, Status::Zero, None, None);
        }
        if let Some(status) = self.direct_rules(k, x, y, &mut steps) {
            return finish(steps, status, None, None);
        }
        let flipped = normalize_at(cells, duality_flip_at(cells, x, y).0, duality_flip_at(cells, x, y).1);
        steps.push(Step {
            rule: Rule::DualityFlip,
            before: (x, y),
            after: Outcome::Pair(flipped),
        });
        if let Some(status) = self.direct_rules(k, flipped.0, flipped.1, &mut steps) {
            return finish(steps, status, None, None);
        }
        let (x, y) = if orientation_key(cells, flipped.0) < orientation_key(cells, x) {
            flipped
        } else {
            steps.pop();
            (x, y)
        };
        let direct = Some(((x, y), level.direct_golden.get(&(x, y)).cloned()));

        let category = &level.category;
        if !category.theta_nonzero(x, y) {
            steps.push(Step {
                rule: Rule::ExactVanishing,
                before: (x, y),
                after: Outcome::Verdict("zero".into()),
            });
            return finish(steps, Status::Zero, direct, None);
        }
        let mirrored = (g.flip(x), g.flip(y));
        let (x, y) = if shortest_key(cells, mirrored) < shortest_key(cells, (x, y)) {
            steps.push(Step {
                rule: Rule::DiagramSymmetry,
                before: (x, y),
                after: Outcome::Pair(mirrored),
            });
            mirrored
        } else {
            (x, y)
        };
        let short = shortest_form(cells, (x, y));
        if short != (x, y) {
            steps.push(Step {
                rule: Rule::ShortestForm,
                before: (x, y),
                after: Outcome::Pair(short),
            });
        }
        let label = level.hard_golden.get(&short).cloned();
        let show = |p: Pair| format!("({}, {})", g.element(p.0).word_string(), g.element(p.1).word_string());

        match self.search_rewrite(k, short) {
            Some(rw) => {
                for &(_, _, before, after) in &rw.moves {
                    steps.push(Step {
                        rule: Rule::WallCrossingRewrite,
                        before,
                        after: Outcome::Pair(after),
                    });
                }
                let (xr, yr) = rw.result;
                if g.support(xr) != GenSet::full(k) {
                    let status = self.descend(k, xr, yr, &mut steps);
                    let verdict = format!(
                        "rewritten along {} to {}; {}",
                        word_text(&rw.word),
                        show(rw.result),
                        match &status {
                            Status::ReducedToRank { ranks, .. } =>
                                format!("parabolic descent to ranks {ranks:?} resolves it"),
                            Status::Zero => "parabolic descent shows it vanishes".into(),
                            other => format!("parabolic descent leaves {}", other.kind()),
                        }
                    );
                    let hard = HardCase {
                        label,
                        pair: short,
                        verdict,
                    };
                    return finish(steps, status, direct, Some(hard));
                }
                let target = shortest_form(cells, rw.result);
                let target_label = level.hard_golden.get(&target).cloned();
                let verdict = match &target_label {
                    Some(l) => format!(
                        "rewritten along {} to {}, the pair of case {l}",
                        word_text(&rw.word),
                        show(rw.result)
                    ),
                    None => format!("rewritten along {} to {}", word_text(&rw.word), show(rw.result)),
                };
                let hard = HardCase {
                    label: label.clone(),
                    pair: short,
                    verdict,
                };
                finish(steps, Status::ResidualHard { label }, direct, Some(hard))
            }
            None => {
                let verdict = "no automatic rule applies; needs a module-level argument".to_string();
                let hard = HardCase {
                    label: label.clone(),
                    pair: short,
                    verdict,
                };
                finish(steps, Status::ResidualHard { label }, direct, Some(hard))
            }
        }
    }

    /// Base cases and parabolic descent on a normalized pair.
    fn direct_rules(&self, k: usize, x: usize, y: usize, steps: &mut Vec<Step>) -> Option<Status> {
        let category = &self.level(k).category;
        let cells = category.cells();
        if let Some(rule) = base_case_at(cells, x, y) {
            return Some(if category.theta_nonzero(x, y) {
                steps.push(Step {
                    rule,
                    before: (x, y),
                    after: Outcome::Verdict("indecomposable".into()),
                });
                Status::ResolvedIndecomposable { rule }
            } else {
                steps.push(Step {
                    rule,
                    before: (x, y),
                    after: Outcome::Verdict("indecomposable or zero".into()),
                });
                steps.push(Step {
                    rule: Rule::ExactVanishing,
                    before: (x, y),
                    after: Outcome::Verdict("zero".into()),
                });
                Status::Zero
            });
        }
        if cells.group().support(x) != GenSet::full(k) {
            return Some(self.descend(k, x, y, steps));
        }
        None
    }

    fn descend(&self, k: usize, x: usize, y: usize, steps: &mut Vec<Step>) -> Status {
        let cells = self.level(k).category.cells();
        let components = parabolic_components_at(cells, x, y).expect("support of x is proper");
        let mut ranks = Vec::new();
        let mut shown = Vec::new();
        let mut zero = false;
        let mut residual = false;
        for (cx, cu) in &components {
            let r = cx.rank();
            ranks.push(r);
            shown.push((cx.word_string(), cu.word_string()));
            let sub = self.level(r);
            let sg = sub.category.group();
            let pair = normalize_at(
                sub.category.cells(),
                sg.index_of(cx).expect("rank matches"),
                sg.index_of(cu).expect("rank matches"),
            );
            match &sub.verdicts[&pair] {
                Status::Zero => zero = true,
                Status::ResidualHard { .. } => residual = true,
                _ => {}
            }
        }
        let verdict = format!(
            "ranks {ranks:?}: {}",
            shown
                .iter()
                .map(|(a, b)| format!("({a}, {b})"))
                .collect::<Vec<_>>()
                .join(" x ")
        );
        steps.push(Step {
            rule: Rule::ParabolicDescent,
            before: (x, y),
            after: Outcome::Verdict(verdict),
        });
        if zero {
            Status::Zero
        } else if residual {
            Status::ResidualHard { label: None }
        } else {
            Status::ReducedToRank {
                ranks,
                components: shown,
            }
        }
    }

    /// First reduced word of `x` whose rewrite ends with a proper support,
    /// otherwise the first word admitting any rewrite.
    fn search_rewrite(&self, k: usize, (x, y): Pair) -> Option<Rewrite> {
        let category = &self.level(k).category;
        let g = category.group();
        let mut fallback = None;
        for word in g.element(x).reduced_words() {
            if let Ok(rw) = rewrite_at(category, x, y, &word) {
                if g.support(rw.result.0) != GenSet::full(k) {
                    return Some(rw);
                }
                fallback.get_or_insert(rw);
            }
        }
        fallback
    }
}

fn normalize_at(cells: &CellData, x: usize, y: usize) -> Pair {
    (cells.duflo_involution(x, Side::Right), cells.left_cell_i_prime(y))
}

fn duality_flip_at(cells: &CellData, x: usize, y: usize) -> Pair {
    let g = cells.group();
    let w0 = g.longest();
    (g.multiply(g.inverse(y), w0), g.multiply(w0, g.inverse(x)))
}

fn is_longest_parabolic(cells: &CellData, w: usize) -> bool {
    let g = cells.group();
    let d = g.descents(w, Side::Left);
    g.index_of(&longest_element(d, g.rank()))
        .map(|i| i == w)
        .unwrap_or(false)
}

fn base_case_at(cells: &CellData, x: usize, y: usize) -> Option<Rule> {
    let g = cells.group();
    let w0 = g.longest();
    if is_longest_parabolic(cells, x) {
        return Some(Rule::LongestParabolic);
    }
    if is_longest_parabolic(cells, g.multiply(y, w0)) {
        return Some(Rule::DualLongestParabolic);
    }
    if cells.equivalent(x, y, CellKind::TwoSided) {
        return Some(Rule::SameTwoSidedCell);
    }
    if g.is_involution(y)
        && cells
            .right_cell_members(y)
            .iter()
            .any(|&z| is_longest_parabolic(cells, g.multiply(z, w0)))
    {
        return Some(Rule::DualLongestRightCell);
    }
    None
}

fn parabolic_components_at(cells: &CellData, x: usize, y: usize) -> Option<Vec<(Permutation, Permutation)>> {
    let g = cells.group();
    let support = g.support(x);
    if support == GenSet::full(g.rank()) {
        return None;
    }
    let (_, u) = coset_decompose(g.element(y), support, Side::Left);
    let restrict = |w: &Permutation, first: usize, last: usize| {
        let image: Vec<u8> = w.raw()[first - 1..=last]
            .iter()
            .map(|&v| v - (first as u8 - 1))
            .collect();
        Permutation::from_image_unchecked(image)
    };
    Some(
        support
            .blocks()
            .into_iter()
            .map(|(a, b)| (restrict(g.element(x), a, b), restrict(&u, a, b)))
            .collect(),
    )
}

fn rewrite_at(category: &CategoryO, x: usize, y: usize, word: &[usize]) -> Result<Rewrite> {
    let g = category.group();
    let hecke = category.hecke();
    if g.multiply_word(word) != x || word.len() != g.length(x) {
        return Err(Error::Precondition(format!(
            "{} is not a reduced word of {}",
            word_text(word),
            g.element(x)
        )));
    }
    if hecke.word_product_kl(word)? != hecke.kl_basis_element(x) {
        return Err(Error::NotApplicable(format!(
            "generator product along {} is not b_x",
            word_text(word)
        )));
    }
    let mut moves = Vec::new();
    let mut current = (x, y);
    let mut rest = word;
    while rest.len() >= 2 {
        let (s, t) = (rest[0], rest[1]);
        let Ok((_, y2)) = category.compose_pair_rewrite(s, t, current.1) else {
            break;
        };
        let x2 = g.multiply_word(&rest[1..]);
        if hecke.word_product_kl(&rest[1..])? != hecke.kl_basis_element(x2) {
            break;
        }
        moves.push((s, t, current, (x2, y2)));
        current = (x2, y2);
        rest = &rest[1..];
    }
    if moves.is_empty() {
        return Err(Error::NotApplicable(format!(
            "no wall-crossing collapse along {}",
            word_text(word)
        )));
    }
    Ok(Rewrite {
        word: word.to_vec(),
        moves,
        result: current,
    })
}

/// Orientation preference between a pair and its dual: smaller a-value of
/// the shape of `x`, then fewer rows.
fn orientation_key(cells: &CellData, x: usize) -> (usize, usize) {
    (cells.a_value(x), cells.shape(x).parts().len())
}

fn word_key(cells: &CellData, w: usize) -> (usize, String) {
    let g = cells.group();
    (g.length(w), g.element(w).word_string())
}

fn shortest_in(cells: &CellData, members: &[usize]) -> usize {
    *members
        .iter()
        .min_by_key(|&&w| word_key(cells, w))
        .expect("cells are nonempty")
}

fn shortest_form(cells: &CellData, (x, y): Pair) -> Pair {
    (
        shortest_in(cells, cells.right_cell_members(x)),
        shortest_in(cells, cells.left_cell_members(y)),
    )
}

fn shortest_key(cells: &CellData, pair: Pair) -> ((usize, String), (usize, String)) {
    let (x, y) = shortest_form(cells, pair);
    (word_key(cells, x), word_key(cells, y))
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        "e".into()
    } else {
        word.iter().map(|i| i.to_string()).collect()
    }
}

fn verdict_of(t: &ReductionTrace) -> String {
    match (&t.hard, &t.status) {
        (Some(h), _) => h.verdict.clone(),
        (None, Status::Zero) => "zero".into(),
        (None, s) => s.kind().into(),
    }
}
