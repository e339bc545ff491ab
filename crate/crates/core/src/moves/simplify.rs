//! Simplification heuristics and random mixing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::diagram::Diagram;

use super::{apply_move, apply_move_traced, enumerate_moves, Move, MoveKind, ALL_KINDS, REDUCING_KINDS};

/// Compose an origin map (current -> start) with one move's origin step
/// (next -> current).
pub fn compose_origins(orig: &[Option<usize>], step: &[Option<usize>]) -> Vec<Option<usize>> {
    step.iter().map(|o| o.and_then(|p| orig[p])).collect()
}

/// Identity origin map for a diagram (every crossing is its own origin).
pub fn identity_origins(d: &Diagram) -> Vec<Option<usize>> {
    (0..d.n()).map(Some).collect()
}

/// Default R3 budget for a single `level_simplify` attempt.
pub const DEFAULT_R3_BUDGET: usize = 1000;

#[derive(Clone, Debug)]
pub struct SimplifyReport {
    pub diagram: Diagram,
    /// Moves applied, in order; replays from the input to `diagram`.
    pub trace: Vec<Move>,
    /// Random-move attempts consumed (R3 draws for level, rounds for global).
    pub attempts: usize,
    pub reached_trivial: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct GlobalConfig {
    /// R3 budget per level round.
    pub max_r3: usize,
    /// Maximum number of level/pass alternation rounds.
    pub max_rounds: usize,
}

impl Default for GlobalConfig {
    fn default() -> GlobalConfig {
        GlobalConfig { max_r3: DEFAULT_R3_BUDGET, max_rounds: 100 }
    }
}

struct Tracked {
    d: Diagram,
    orig: Vec<Option<usize>>,
}

impl Tracked {
    fn apply(&mut self, m: &Move, trace: &mut Vec<Move>) {
        let (d2, step) = apply_move_traced(&self.d, m).expect("enumerated move must apply");
        self.orig = compose_origins(&self.orig, &step);
        self.d = d2;
        trace.push(m.clone());
    }
}

fn reduce_greedily(t: &mut Tracked, trace: &mut Vec<Move>) {
    loop {
        let moves = enumerate_moves(&t.d, &REDUCING_KINDS);
        let Some(m) = moves.into_iter().next() else { break };
        t.apply(&m, trace);
    }
}

fn level_simplify_rng(d: &Diagram, rng: &mut ChaCha20Rng, max_r3: usize) -> (SimplifyReport, Vec<Option<usize>>) {
    let mut t = Tracked { d: d.clone(), orig: identity_origins(d) };
    let mut trace = Vec::new();
    let mut attempts = 0;
    reduce_greedily(&mut t, &mut trace);
    while t.d.n() > 0 && attempts < max_r3 {
        let r3s = enumerate_moves(&t.d, &[MoveKind::R3]);
        if r3s.is_empty() {
            break;
        }
        let m = r3s[rng.gen_range(0..r3s.len())].clone();
        t.apply(&m, &mut trace);
        attempts += 1;
        reduce_greedily(&mut t, &mut trace);
    }
    let reached_trivial = t.d.n() == 0;
    (SimplifyReport { diagram: t.d, trace, attempts, reached_trivial }, t.orig)
}

/// Greedy R1-/R2- reduction interleaved with random R3 moves, up to `max_r3`
/// R3 draws. Never increases the crossing number; deterministic in the seed.
pub fn level_simplify(d: &Diagram, seed: u64, max_r3: usize) -> SimplifyReport {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    level_simplify_rng(d, &mut rng, max_r3).0
}

/// `level_simplify` plus the origin map: for each crossing of the result,
/// the index of the crossing of `d` it descends from. Level moves never
/// create crossings, so every entry is `Some`.
pub fn level_simplify_tracked(
    d: &Diagram,
    seed: u64,
    max_r3: usize,
) -> (SimplifyReport, Vec<Option<usize>>) {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    level_simplify_rng(d, &mut rng, max_r3)
}

/// First enumerated pass move whose reroute strictly cuts crossings.
fn decreasing_pass_move(d: &Diagram) -> Option<Move> {
    super::pass::enumerate_pass_moves(d)
        .into_iter()
        .find(|p| p.route.len() < p.run_len)
        .map(Move::Pass)
}

/// Alternates `level_simplify` rounds with strictly-decreasing pass moves
/// until neither makes progress or the round budget runs out.
pub fn global_simplify(d: &Diagram, seed: u64, cfg: &GlobalConfig) -> SimplifyReport {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut trace = Vec::new();
    let mut rounds = 0;
    loop {
        let (rep, _) = level_simplify_rng(&cur, &mut rng, cfg.max_r3);
        cur = rep.diagram;
        trace.extend(rep.trace);
        rounds += 1;
        if cur.n() == 0 || rounds >= cfg.max_rounds {
            break;
        }
        let Some(m) = decreasing_pass_move(&cur) else { break };
        cur = apply_move(&cur, &m).expect("enumerated pass move must apply");
        trace.push(m);
    }
    let reached_trivial = cur.n() == 0;
    SimplifyReport { diagram: cur, trace, attempts: rounds, reached_trivial }
}

/// `n_moves` random moves: a uniform move kind, then a uniform site of that
/// kind. Draws that find no site or would exceed `max_n` crossings still
/// consume an iteration, keeping the schedule deterministic in the seed.
pub fn random_mix(d: &Diagram, seed: u64, n_moves: usize, max_n: usize) -> Diagram {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    for _ in 0..n_moves {
        let kind = ALL_KINDS[rng.gen_range(0..ALL_KINDS.len())];
        let sites = enumerate_moves(&cur, &[kind]);
        if sites.is_empty() {
            continue;
        }
        let m = &sites[rng.gen_range(0..sites.len())];
        if cur.n() as i64 + m.delta_n() > max_n as i64 {
            continue;
        }
        cur = apply_move(&cur, m).expect("enumerated move must apply");
    }
    cur
}
