//! Coarse stabilizers of vertex pairs in `Y` under `F(a,b)`.
//!
//! For a pair `x, y` far apart in `Y` and a radius `R`, the census enumerates
//! every `g` in `F(a,b)` up to a word-length cap that moves both points by at
//! most `R`, checks the count against `M(R)` and checks that all members are
//! powers of one root-free element with bounded exponents.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{Letter, ReducedWord};
use crate::ydist::YMetric;

/// Constants derived from a radius `R` and a fellow-traveling constant `Ĉ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcylParams {
    pub radius: u64,
    pub c_hat: u64,
    /// `100 (R + 4Ĉ)(R + 6Ĉ + 10)`
    pub separation: u64,
    /// `14 (R + 4Ĉ + 1) + 1`
    pub max_members: u64,
    /// `7 (R + 4Ĉ + 1)`
    pub exponent_cap: u64,
}

impl AcylParams {
    pub fn new(radius: u64, c_hat: u64) -> Result<AcylParams> {
        if radius == 0 {
            return Err(Error::InvalidRadius);
        }
        let c = c_hat.max(1);
        Ok(AcylParams {
            radius,
            c_hat: c,
            separation: 100 * (radius + 4 * c) * (radius + 6 * c + 10),
            max_members: 14 * (radius + 4 * c + 1) + 1,
            exponent_cap: 7 * (radius + 4 * c + 1),
        })
    }
}

/// `d_Y(p, g p)`.
pub fn displacement(metric: &YMetric, g: &ReducedWord, p: &ReducedWord) -> usize {
    metric.dist(p, &g.multiply(p))
}

/// Precomputed greedy data for computing `|p⁻¹ g p|_Y` quickly when `p` is
/// long and `g` is short.
///
/// The greedy decomposition of `p⁻¹ g p` agrees with the one of `p⁻¹` until
/// a factor reaches the region altered by `g`, and once a cut lands in the
/// unaltered suffix of `p` the remaining count is the greedy count of that
/// suffix. Both are tabulated here.
pub struct DisplacementIndex<'m> {
    metric: &'m YMetric,
    point: ReducedWord,
    point_inv: ReducedWord,
    /// Greedy cuts of `p⁻¹` from position 0.
    inv_cuts: Vec<usize>,
    /// `suffix_count[t]` = greedy factor count of `p[t..]`.
    suffix_count: Vec<u32>,
}

impl<'m> DisplacementIndex<'m> {
    pub fn new(metric: &'m YMetric, point: &ReducedWord) -> DisplacementIndex<'m> {
        let point_inv = point.inverse();
        let inv = point_inv.letters();
        let mut inv_cuts = vec![0];
        let mut pos = 0;
        while pos < inv.len() {
            pos += metric.oracle().longest_w_prefix_slice(inv, pos);
            inv_cuts.push(pos);
        }
        let letters = point.letters();
        let n = letters.len();
        let steps: Vec<usize> = (0..n)
            .into_par_iter()
            .map(|t| metric.oracle().longest_w_prefix_slice(letters, t))
            .collect();
        let mut suffix_count = vec![0u32; n + 1];
        for t in (0..n).rev() {
            suffix_count[t] = 1 + suffix_count[t + steps[t]];
        }
        DisplacementIndex {
            metric,
            point: point.clone(),
            point_inv,
            inv_cuts,
            suffix_count,
        }
    }

    pub fn point(&self) -> &ReducedWord {
        &self.point
    }

    /// `|p|_Y`.
    pub fn point_length(&self) -> usize {
        self.suffix_count[0] as usize
    }

    /// `d_Y(p, g p) = |p⁻¹ g p|_Y`, equal to the greedy count on the full word.
    pub fn displacement(&self, g: &ReducedWord) -> usize {
        let inv = self.point_inv.letters();
        let p = self.point.letters();

        // Reduce p⁻¹ · g · p as kept-prefix inv[..kept] · middle · p[resume..].
        let mut kept = inv.len();
        let mut middle: Vec<Letter> = Vec::with_capacity(g.len());
        let push = |l: Letter, kept: &mut usize, middle: &mut Vec<Letter>| -> bool {
            match middle.last() {
                Some(&last) if last == l.inverse() => {
                    middle.pop();
                    true
                }
                Some(_) => {
                    middle.push(l);
                    false
                }
                None if *kept > 0 && inv[*kept - 1] == l.inverse() => {
                    *kept -= 1;
                    true
                }
                None => {
                    middle.push(l);
                    false
                }
            }
        };
        for &l in g.letters() {
            push(l, &mut kept, &mut middle);
        }
        let mut resume = 0;
        while resume < p.len() && push(p[resume], &mut kept, &mut middle) {
            resume += 1;
        }
        if resume < p.len() {
            // push() appended p[resume] to the middle
            resume += 1;
        }
        let suffix_start = kept + middle.len();
        let total = suffix_start + (p.len() - resume);

        // Cut i of p⁻¹ carries over while the next cut, plus one letter of
        // lookahead, stays inside the kept prefix.
        let reusable = self.inv_cuts[1..].partition_point(|&next| next < kept);
        let count = reusable;
        let pos = self.inv_cuts[reusable];

        let window_end = total.min(suffix_start + DISPLACEMENT_WINDOW);
        let mut buffer: Vec<Letter> = Vec::with_capacity(window_end - pos);
        buffer.extend_from_slice(&inv[pos..kept]);
        buffer.extend_from_slice(&middle);
        buffer.extend_from_slice(&p[resume..resume + (window_end - suffix_start)]);
        match self.greedy_until_suffix(&buffer, pos, suffix_start, resume, window_end == total) {
            Some(rest) => count + rest,
            None => {
                // a factor ran past the window; redo on the whole word
                let mut full = Vec::with_capacity(total - pos);
                full.extend_from_slice(&inv[pos..kept]);
                full.extend_from_slice(&middle);
                full.extend_from_slice(&p[resume..]);
                count + self.greedy_until_suffix(&full, pos, suffix_start, resume, true).expect("full word")
            }
        }
    }

    /// Greedy count of `buffer` (which starts at absolute position `offset`),
    /// finishing with the tabulated suffix count once a cut reaches
    /// `suffix_start`. `None` if a factor touches the end of a truncated buffer.
    fn greedy_until_suffix(
        &self,
        buffer: &[Letter],
        offset: usize,
        suffix_start: usize,
        resume: usize,
        whole: bool,
    ) -> Option<usize> {
        let mut local = 0;
        let mut count = 0;
        while local < buffer.len() {
            let pos = offset + local;
            if pos >= suffix_start {
                return Some(count + self.suffix_count[resume + pos - suffix_start] as usize);
            }
            let step = self.metric.oracle().longest_w_prefix_slice(buffer, local);
            if !whole && local + step == buffer.len() {
                return None;
            }
            local += step;
            count += 1;
        }
        if whole || offset + local >= suffix_start {
            let pos = offset + local;
            let tail = if pos >= suffix_start {
                self.suffix_count[resume + pos - suffix_start] as usize
            } else {
                0
            };
            Some(count + tail)
        } else {
            None
        }
    }
}

/// Letters of the unaltered suffix materialized after the junction.
const DISPLACEMENT_WINDOW: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusMember {
    pub g: ReducedWord,
    pub x_displacement: u64,
    pub y_displacement: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootStructure {
    pub root: ReducedWord,
    /// `t` with `g = root^t`, in member order.
    pub exponents: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub x: ReducedWord,
    pub y: ReducedWord,
    pub params: AcylParams,
    pub cap: usize,
    /// `d_Y(x, y)`.
    pub pair_distance: u64,
    /// Whether `d_Y(x, y) >= L(R)`.
    pub separated: bool,
    /// The identity always qualifies and is not listed in `members`.
    pub identity_qualifies: bool,
    /// Nontrivial qualifying elements, ordered by length then text.
    pub members: Vec<CensusMember>,
    /// Whether every word up to `cap` was examined within budget.
    pub complete: bool,
    pub nodes_visited: u64,
    /// Whether `members.len() <= M(R) - 1`.
    pub bound_holds: bool,
    pub root: Option<RootStructure>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusLimits {
    pub cap: usize,
    /// Maximum number of enumeration nodes before the report is marked incomplete.
    pub budget: u64,
}

impl Default for CensusLimits {
    fn default() -> Self {
        CensusLimits {
            cap: 12,
            budget: 20_000_000,
        }
    }
}

const C_FREE: [Letter; 4] = [Letter::A, Letter::B, Letter::A_INV, Letter::B_INV];

/// Enumerates `g` in `F(a,b)` with `1 <= |g|_A <= cap` moving both `x` and `y`
/// by at most `R` in `Y`.
///
/// Prefixes are pruned once `|prefix|_Y > R + 2 min(|x|_Y, |y|_Y)`: a
/// qualifying `g` satisfies `|g|_Y <= 2|x|_Y + d_Y(x, gx)` and `|·|_Y` does
/// not decrease along prefixes.
pub fn census(
    metric: &YMetric,
    x: &ReducedWord,
    y: &ReducedWord,
    params: AcylParams,
    limits: CensusLimits,
) -> CensusReport {
    let x_index = DisplacementIndex::new(metric, x);
    let y_index = DisplacementIndex::new(metric, y);
    let pair_distance = metric.dist(x, y) as u64;
    let radius = params.radius as usize;
    let prune = radius + 2 * x_index.point_length().min(y_index.point_length());

    // split the search tree at depth one across workers, sharing the budget evenly
    let share = limits.budget / C_FREE.len() as u64;
    let branches: Vec<(Vec<CensusMember>, u64, bool)> = C_FREE
        .par_iter()
        .map(|&first| {
            let mut state = Walk {
                metric,
                x_index: &x_index,
                y_index: &y_index,
                radius,
                prune,
                cap: limits.cap,
                budget: share,
                visited: 0,
                exhausted: false,
                members: Vec::new(),
            };
            if limits.cap >= 1 {
                let mut word = vec![first];
                state.visit(&mut word);
            }
            (state.members, state.visited, state.exhausted)
        })
        .collect();

    let mut members: Vec<CensusMember> = Vec::new();
    let mut visited = 0;
    let mut complete = true;
    for (m, v, exhausted) in branches {
        members.extend(m);
        visited += v;
        complete &= !exhausted;
    }
    members.sort_by(|a, b| a.g.len().cmp(&b.g.len()).then_with(|| a.g.cmp(&b.g)));
    let bound_holds = (members.len() as u64) < params.max_members;
    let mut report = CensusReport {
        x: x.clone(),
        y: y.clone(),
        params,
        cap: limits.cap,
        pair_distance,
        separated: pair_distance >= params.separation,
        identity_qualifies: true,
        members,
        complete,
        nodes_visited: visited,
        bound_holds,
        root: None,
    };
    report.root = root_structure(&report).ok().flatten();
    report
}

struct Walk<'a, 'm> {
    metric: &'a YMetric,
    x_index: &'a DisplacementIndex<'m>,
    y_index: &'a DisplacementIndex<'m>,
    radius: usize,
    prune: usize,
    cap: usize,
    budget: u64,
    visited: u64,
    exhausted: bool,
    members: Vec<CensusMember>,
}

impl Walk<'_, '_> {
    fn visit(&mut self, word: &mut Vec<Letter>) {
        if self.visited >= self.budget {
            self.exhausted = true;
            return;
        }
        self.visited += 1;
        if self.metric.length_of_slice(word) > self.prune {
            return;
        }
        let g = ReducedWord::from_letters(word.iter().copied());
        let dx = self.x_index.displacement(&g);
        if dx <= self.radius {
            let dy = self.y_index.displacement(&g);
            if dy <= self.radius {
                self.members.push(CensusMember {
                    g,
                    x_displacement: dx as u64,
                    y_displacement: dy as u64,
                });
            }
        }
        if word.len() == self.cap {
            return;
        }
        let last = *word.last().expect("nonempty");
        for next in C_FREE {
            if next == last.inverse() {
                continue;
            }
            word.push(next);
            self.visit(word);
            word.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

/// Common primitive root of the census members, with exponents.
///
/// `Ok(None)` when there are fewer than two nontrivial members. A member
/// whose root differs (up to inversion) or whose exponent exceeds the cap is
/// reported as an error.
pub fn root_structure(report: &CensusReport) -> Result<Option<RootStructure>> {
    if !report.complete {
        return Err(Error::IncompleteCensus);
    }
    if report.members.len() < 2 {
        return Ok(None);
    }
    let (root, _) = report.members[0].g.primitive_root()?;
    let root_inv = root.inverse();
    let mut exponents = Vec::with_capacity(report.members.len());
    for member in &report.members {
        let (r, e) = member.g.primitive_root()?;
        let t = if r == root {
            e as i64
        } else if r == root_inv {
            -(e as i64)
        } else {
            return Err(Error::RootMismatch {
                first: report.members[0].g.to_string(),
                second: member.g.to_string(),
                first_root: root.to_string(),
                second_root: r.to_string(),
            });
        };
        if t.unsigned_abs() > report.params.exponent_cap {
            return Err(Error::ExponentTooLarge {
                member: member.g.to_string(),
                exponent: t,
                cap: report.params.exponent_cap,
            });
        }
        exponents.push(t);
    }
    Ok(Some(RootStructure { root, exponents }))
}
