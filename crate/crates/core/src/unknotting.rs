//! Crossing-switch unknotting: the episode environment, unknot
//! certification, brute-force minimal sets, baseline strategies, revisit
//! blocking and tabular Q-learning.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{KnotError, Result};
use crate::invariants::{
    feature_vector, fingerprint_capped, jones_capped, signature, FeatureConfig, FeatureVector,
    Fingerprint, FingerprintMode,
};
use crate::moves::{
    apply_move_traced, compose_origins, enumerate_moves, global_simplify, identity_origins,
    level_simplify_tracked, GlobalConfig, Move, MoveKind, DEFAULT_R3_BUDGET,
};

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyBudget {
    /// Independent seeded global-simplification attempts.
    pub attempts: usize,
    pub max_r3: usize,
    pub max_rounds: usize,
    pub jones_cap: usize,
}

impl Default for CertifyBudget {
    fn default() -> CertifyBudget {
        CertifyBudget { attempts: 3, max_r3: DEFAULT_R3_BUDGET, max_rounds: 100, jones_cap: 64 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certification {
    /// Sound positive: the trace replays to the 0-crossing diagram.
    Yes { trace: Vec<Move> },
    /// Sound negative: a nontrivial invariant obstructs unknotting.
    NotUnknot { reason: String },
    Unknown,
}

/// Certify whether `d` is an unknot diagram: a nontrivial Jones polynomial
/// rejects; simplification to zero crossings accepts; otherwise Unknown.
pub fn certify_unknot(d: &Diagram, budget: &CertifyBudget) -> Certification {
    if d.n() == 0 {
        return Certification::Yes { trace: Vec::new() };
    }
    if let Ok(v) = jones_capped(d, budget.jones_cap) {
        if !v.is_one() {
            return Certification::NotUnknot { reason: "nontrivial Jones polynomial".into() };
        }
    }
    let cfg = GlobalConfig { max_r3: budget.max_r3, max_rounds: budget.max_rounds };
    for seed in 0..budget.attempts as u64 {
        let rep = global_simplify(d, seed, &cfg);
        if rep.reached_trivial {
            return Certification::Yes { trace: rep.trace };
        }
    }
    Certification::Unknown
}

// ---------------------------------------------------------------------------
// Environment
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RewardScheme {
    /// +1 on reaching a certified unknot, 0 otherwise.
    Terminal,
    /// -1 per crossing change, 0 otherwise.
    PerSwitch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RevisitMode {
    None,
    Alexander,
    Jones,
    Both,
}

impl RevisitMode {
    fn fingerprint_mode(self) -> Option<FingerprintMode> {
        match self {
            RevisitMode::None => None,
            RevisitMode::Alexander => Some(FingerprintMode::Alexander),
            RevisitMode::Jones => Some(FingerprintMode::Jones),
            RevisitMode::Both => Some(FingerprintMode::Both),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnvConfig {
    pub max_steps: usize,
    pub reward: RewardScheme,
    pub revisit: RevisitMode,
    pub certify: CertifyBudget,
    /// Crossing budget for strategies that may apply growing moves.
    pub max_n: usize,
    /// Crossing indices of the start diagram that must end up switched an
    /// odd number of times.
    pub forced: Vec<usize>,
    pub features: FeatureConfig,
}

impl Default for EnvConfig {
    fn default() -> EnvConfig {
        EnvConfig {
            max_steps: 30,
            reward: RewardScheme::Terminal,
            revisit: RevisitMode::None,
            certify: CertifyBudget::default(),
            max_n: 200,
            forced: Vec::new(),
            features: FeatureConfig::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct State {
    pub features: FeatureVector,
    pub fingerprint: Fingerprint,
    pub n: usize,
    pub done: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Unknotted,
    Exhausted,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    /// Start-diagram crossing indices in switch order (None = a switch of a
    /// crossing created during the episode, not expressible at the start).
    pub ordered: Vec<Option<usize>>,
    /// Tracked indices switched an odd number of times, sorted.
    pub reduced: Vec<usize>,
    pub outcome: Outcome,
    /// Length of the simplification certificate of the final unknot.
    pub certificate_len: usize,
    /// Whether all forced crossings ended up switched oddly (None when no
    /// constraint was set).
    pub forced_satisfied: Option<bool>,
}

pub struct Environment {
    config: EnvConfig,
    cur: Diagram,
    orig_of: Vec<Option<usize>>,
    steps: usize,
    ordered: Vec<Option<usize>>,
    visited: BTreeSet<Fingerprint>,
    done: bool,
    unknotted: bool,
    exhausted: bool,
    certificate: Vec<Move>,
}

/// Start an episode on `d`; an already-trivial diagram is done immediately.
pub fn env_reset(d: &Diagram, config: EnvConfig) -> Environment {
    let mut env = Environment {
        orig_of: identity_origins(d),
        cur: d.clone(),
        steps: 0,
        ordered: Vec::new(),
        visited: BTreeSet::new(),
        done: false,
        unknotted: false,
        exhausted: false,
        certificate: Vec::new(),
        config,
    };
    if let Some(mode) = env.config.revisit.fingerprint_mode() {
        env.visited.insert(fingerprint_capped(d, mode, env.config.certify.jones_cap));
    }
    if let Certification::Yes { trace } = certify_unknot(d, &env.config.certify) {
        env.done = true;
        env.unknotted = true;
        env.certificate = trace;
    }
    env
}

impl Environment {
    pub fn diagram(&self) -> &Diagram {
        &self.cur
    }

    pub fn done(&self) -> bool {
        self.done
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Origin in the start diagram of each current crossing.
    pub fn origins(&self) -> &[Option<usize>] {
        &self.orig_of
    }

    pub fn state(&self) -> State {
        State {
            features: feature_vector(&self.cur, &self.config.features),
            fingerprint: fingerprint_capped(
                &self.cur,
                FingerprintMode::Both,
                self.config.certify.jones_cap,
            ),
            n: self.cur.n(),
            done: self.done,
        }
    }

    fn lookahead_fingerprint(&self, a: usize, mode: FingerprintMode) -> Fingerprint {
        let d2 = self.cur.change_crossing(a).expect("action in range");
        fingerprint_capped(&d2, mode, self.config.certify.jones_cap)
    }

    /// Actions not masked by the revisit filter. Empty while done.
    pub fn allowed_actions(&self) -> Vec<usize> {
        if self.done {
            return Vec::new();
        }
        match self.config.revisit.fingerprint_mode() {
            None => (0..self.cur.n()).collect(),
            Some(mode) => (0..self.cur.n())
                .filter(|&a| !self.visited.contains(&self.lookahead_fingerprint(a, mode)))
                .collect(),
        }
    }

    /// Like `allowed_actions`, restricted to crossings traceable to the
    /// start diagram (keeps reduced trajectories replayable).
    pub fn allowed_tracked_actions(&self) -> Vec<usize> {
        self.allowed_actions().into_iter().filter(|&a| self.orig_of[a].is_some()).collect()
    }

    /// End the episode as Exhausted (no admissible action remains).
    pub fn mark_exhausted(&mut self) {
        if !self.done {
            self.done = true;
            self.exhausted = true;
        }
    }

    /// Switch crossing `a`; returns (reward, done).
    pub fn step(&mut self, a: usize) -> Result<(f64, bool)> {
        if self.done {
            return Err(KnotError::Validation("episode is already over".into()));
        }
        if a >= self.cur.n() {
            return Err(KnotError::IndexOutOfRange { index: a, n: self.cur.n() });
        }
        self.cur = self.cur.change_crossing(a)?;
        self.ordered.push(self.orig_of[a]);
        self.steps += 1;
        if let Some(mode) = self.config.revisit.fingerprint_mode() {
            self.visited
                .insert(fingerprint_capped(&self.cur, mode, self.config.certify.jones_cap));
        }
        let mut reward = match self.config.reward {
            RewardScheme::Terminal => 0.0,
            RewardScheme::PerSwitch => -1.0,
        };
        if let Certification::Yes { trace } = certify_unknot(&self.cur, &self.config.certify) {
            self.done = true;
            self.unknotted = true;
            self.certificate = trace;
            if self.config.reward == RewardScheme::Terminal {
                reward = 1.0;
            }
        } else if self.steps >= self.config.max_steps {
            self.done = true;
        }
        Ok((reward, self.done))
    }

    /// Level-simplify the current diagram in place (not a reward step);
    /// origins are carried through so later switches stay traceable.
    pub fn simplify_level(&mut self, seed: u64, max_r3: usize) {
        if self.done {
            return;
        }
        let (rep, step) = level_simplify_tracked(&self.cur, seed, max_r3);
        self.orig_of = compose_origins(&self.orig_of, &step);
        self.cur = rep.diagram;
        if rep.reached_trivial {
            self.done = true;
            self.unknotted = true;
        }
    }

    /// Apply a Reidemeister/pass move in place (not a reward step).
    pub fn apply_free_move(&mut self, m: &Move) -> Result<()> {
        let (d2, step) = apply_move_traced(&self.cur, m)?;
        if d2.n() > self.config.max_n {
            return Err(KnotError::CapExceeded { n: d2.n(), cap: self.config.max_n });
        }
        self.orig_of = compose_origins(&self.orig_of, &step);
        self.cur = d2;
        if self.cur.n() == 0 {
            self.done = true;
            self.unknotted = true;
        }
        Ok(())
    }

    /// Close out the episode into a trajectory record.
    pub fn trajectory(&self) -> Trajectory {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for o in self.ordered.iter().flatten() {
            *counts.entry(*o).or_insert(0) += 1;
        }
        let reduced: Vec<usize> =
            counts.iter().filter(|&(_, c)| c % 2 == 1).map(|(&i, _)| i).collect();
        let outcome = if self.unknotted {
            Outcome::Unknotted
        } else if self.exhausted {
            Outcome::Exhausted
        } else {
            Outcome::Unknown
        };
        let forced_satisfied = if self.config.forced.is_empty() {
            None
        } else {
            Some(self.config.forced.iter().all(|f| reduced.binary_search(f).is_ok()))
        };
        Trajectory {
            ordered: self.ordered.clone(),
            reduced,
            outcome,
            certificate_len: self.certificate.len(),
            forced_satisfied,
        }
    }
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceResult {
    /// Minimal unknotting-set size, if one was certified.
    pub min_size: Option<usize>,
    /// All minimal unknotting sets at that size (sorted indices).
    pub sets: Vec<Vec<usize>>,
    pub tested: u64,
    /// True if some certification came back Unknown; a `min_size` of `None`
    /// is then only a lower-bound claim.
    pub any_unknown: bool,
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k == 0 {
        f(&idx);
        return;
    }
    if k > n {
        return;
    }
    loop {
        if !f(&idx) {
            return;
        }
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Minimal unknotting sets by exhaustive search in order of size, testing at
/// most one of each complement pair (a set unknots iff its complement does).
pub fn brute_force_min_unknotting(
    d: &Diagram,
    max_size: usize,
    budget: &CertifyBudget,
    work_cap: u64,
) -> Result<BruteForceResult> {
    let n = d.n();
    let top = max_size.min(n / 2);
    let estimate: u64 = (0..=top as u64).map(|k| binomial(n.max(1) as u64, k)).sum();
    if estimate > work_cap {
        return Err(KnotError::WorkCapExceeded { estimate, cap: work_cap });
    }
    let mut tested = 0u64;
    let mut any_unknown = false;
    for k in 0..=top {
        let mut found: Vec<Vec<usize>> = Vec::new();
        for_each_subset(n, k, |set| {
            // at the halfway size keep only sets containing crossing 0,
            // the canonical representative of each complement pair
            if 2 * k == n && n > 0 && set.first() != Some(&0) {
                return true;
            }
            let mut cur = d.clone();
            for &i in set {
                cur = cur.change_crossing(i).expect("index in range");
            }
            tested += 1;
            match certify_unknot(&cur, budget) {
                Certification::Yes { .. } => {
                    found.push(set.to_vec());
                    if 2 * k == n {
                        // the untested complement unknots too
                        let comp: Vec<usize> = (0..n).filter(|i| !set.contains(i)).collect();
                        found.push(comp);
                    }
                }
                Certification::Unknown => any_unknown = true,
                Certification::NotUnknot { .. } => {}
            }
            true
        });
        if !found.is_empty() {
            found.sort();
            return Ok(BruteForceResult {
                min_size: Some(k),
                sets: found,
                tested,
                any_unknown,
            });
        }
    }
    Ok(BruteForceResult { min_size: None, sets: Vec::new(), tested, any_unknown })
}

// ---------------------------------------------------------------------------
// Strategies
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    Random,
    /// Weights over the action categories R1-, R1+, R2-, R2+, R3, switch;
    /// integers in 1..=100.
    WeightedRandom([u32; 6]),
    SimplifyRandom,
    SimplifyMinCrossing,
}

const LOOKAHEAD_R3: usize = 50;

fn min_crossing_action(env: &Environment, actions: &[usize]) -> Option<usize> {
    actions
        .iter()
        .map(|&a| {
            let d2 = env.diagram().change_crossing(a).expect("action in range");
            let (rep, _) = level_simplify_tracked(&d2, 0, LOOKAHEAD_R3);
            (rep.diagram.n(), a)
        })
        .min()
        .map(|(_, a)| a)
}

fn run_episode(d: &Diagram, strategy: &Strategy, seed: u64, config: &EnvConfig) -> Trajectory {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut env = env_reset(d, config.clone());
    let simplify_first = matches!(strategy, Strategy::SimplifyRandom | Strategy::SimplifyMinCrossing);
    let mut free_actions = 0usize;
    while !env.done() {
        if simplify_first {
            env.simplify_level(rng.gen(), config.certify.max_r3);
            if env.done() {
                break;
            }
        }
        match strategy {
            Strategy::Random | Strategy::SimplifyRandom => {
                let acts = env.allowed_tracked_actions();
                if acts.is_empty() {
                    env.mark_exhausted();
                    break;
                }
                let a = acts[rng.gen_range(0..acts.len())];
                env.step(a).expect("allowed action");
            }
            Strategy::SimplifyMinCrossing => {
                let acts = env.allowed_tracked_actions();
                let Some(a) = min_crossing_action(&env, &acts) else {
                    env.mark_exhausted();
                    break;
                };
                env.step(a).expect("allowed action");
            }
            Strategy::WeightedRandom(w) => {
                if free_actions >= 20 * config.max_steps {
                    env.mark_exhausted();
                    break;
                }
                free_actions += 1;
                let total: u64 = w.iter().map(|&x| x as u64).sum();
                let mut pick = rng.gen_range(0..total.max(1));
                let mut cat = 0;
                for (i, &x) in w.iter().enumerate() {
                    if pick < x as u64 {
                        cat = i;
                        break;
                    }
                    pick -= x as u64;
                }
                if cat == 5 {
                    let acts = env.allowed_tracked_actions();
                    if acts.is_empty() {
                        continue;
                    }
                    let a = acts[rng.gen_range(0..acts.len())];
                    env.step(a).expect("allowed action");
                } else {
                    let kind = [
                        MoveKind::R1Neg,
                        MoveKind::R1Pos,
                        MoveKind::R2Neg,
                        MoveKind::R2Pos,
                        MoveKind::R3,
                    ][cat];
                    let sites = enumerate_moves(env.diagram(), &[kind]);
                    if sites.is_empty() {
                        continue;
                    }
                    let m = &sites[rng.gen_range(0..sites.len())];
                    let _ = env.apply_free_move(m); // cap rejections just skip
                }
            }
        }
    }
    env.trajectory()
}

/// Best trajectory (Unknotted first, then shortest reduced set) over
/// `repeats` seeded episodes.
pub fn run_strategy(
    d: &Diagram,
    strategy: &Strategy,
    seed: u64,
    repeats: usize,
    config: &EnvConfig,
) -> Trajectory {
    let mut best: Option<Trajectory> = None;
    for r in 0..repeats.max(1) as u64 {
        let ep_seed = seed.wrapping_add(r.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let t = run_episode(d, strategy, ep_seed, config);
        let better = match &best {
            None => true,
            Some(b) => {
                let key = |t: &Trajectory| (t.outcome != Outcome::Unknotted, t.reduced.len());
                key(&t) < key(b)
            }
        };
        if better {
            best = Some(t);
        }
    }
    best.expect("at least one episode ran")
}

/// Signature lower bound |sigma| / 2 <= u for the dataset gate.
pub fn signature_lower_bound(d: &Diagram) -> i64 {
    signature(d).abs() / 2
}

// ---------------------------------------------------------------------------
// Q-learning
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QLearningConfig {
    pub alpha: f64,
    pub gamma: f64,
    pub epsilon: f64,
    pub episodes: usize,
    pub max_steps: usize,
}

impl Default for QLearningConfig {
    fn default() -> QLearningConfig {
        QLearningConfig { alpha: 0.5, gamma: 0.9, epsilon: 0.2, episodes: 200, max_steps: 10 }
    }
}

/// Tabular action values over invariant-fingerprint states.
#[derive(Clone, Debug, Default)]
pub struct QTable {
    pub q: BTreeMap<(Fingerprint, usize), f64>,
}

impl QTable {
    fn best_value(&self, s: &Fingerprint, n: usize) -> f64 {
        (0..n).map(|a| self.q.get(&(*s, a)).copied().unwrap_or(0.0)).fold(0.0, f64::max)
    }

    /// Greedy action, if any entry for this state was ever written.
    pub fn best_action(&self, s: &Fingerprint, n: usize) -> Option<usize> {
        let mut best: Option<(f64, usize)> = None;
        for a in 0..n {
            if let Some(&v) = self.q.get(&(*s, a)) {
                if best.map_or(true, |(bv, _)| v > bv) {
                    best = Some((v, a));
                }
            }
        }
        best.map(|(_, a)| a)
    }
}

fn state_of(env: &Environment) -> Fingerprint {
    fingerprint_capped(env.diagram(), FingerprintMode::Both, 64)
}

/// Tabular Q-learning with epsilon-greedy exploration under the terminal
/// reward scheme. With gamma < 1 all values stay in [0, 1].
pub fn q_train(instances: &[Diagram], cfg: &QLearningConfig, seed: u64) -> QTable {
    let mut table = QTable::default();
    if instances.is_empty() {
        return table;
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let env_cfg = EnvConfig {
        max_steps: cfg.max_steps,
        reward: RewardScheme::Terminal,
        ..EnvConfig::default()
    };
    for ep in 0..cfg.episodes {
        let mut env = env_reset(&instances[ep % instances.len()], env_cfg.clone());
        while !env.done() {
            let n = env.diagram().n();
            if n == 0 {
                break;
            }
            let s = state_of(&env);
            let a = if rng.gen_bool(cfg.epsilon) {
                rng.gen_range(0..n)
            } else {
                table.best_action(&s, n).unwrap_or_else(|| rng.gen_range(0..n))
            };
            let (r, done) = env.step(a).expect("action in range");
            let future = if done {
                0.0
            } else {
                table.best_value(&state_of(&env), env.diagram().n())
            };
            let entry = table.q.entry((s, a)).or_insert(0.0);
            *entry += cfg.alpha * (r + cfg.gamma * future - *entry);
        }
    }
    table
}

/// Follow the greedy policy; states the table has never seen fall back to
/// the simplify-min-crossing choice.
pub fn q_solve(d: &Diagram, table: &QTable, config: &EnvConfig) -> Trajectory {
    let mut env = env_reset(d, config.clone());
    while !env.done() {
        let n = env.diagram().n();
        let s = state_of(&env);
        let a = match table.best_action(&s, n) {
            Some(a) => a,
            None => {
                let acts = env.allowed_tracked_actions();
                match min_crossing_action(&env, &acts) {
                    Some(a) => a,
                    None => {
                        env.mark_exhausted();
                        break;
                    }
                }
            }
        };
        env.step(a).expect("action in range");
    }
    env.trajectory()
}

// ---------------------------------------------------------------------------
// Trajectory intermediates
// ---------------------------------------------------------------------------

/// Apply the first `k` switches of an unknotting set, then simplify: the
/// intermediate knot along the unknotting trajectory.
pub fn trajectory_intermediate(d: &Diagram, set: &[usize], k: usize) -> Result<Diagram> {
    if k > set.len() {
        return Err(KnotError::Validation(format!(
            "prefix {k} exceeds set size {}",
            set.len()
        )));
    }
    let mut cur = d.clone();
    for &i in &set[..k] {
        cur = cur.change_crossing(i)?;
    }
    Ok(global_simplify(&cur, 0, &GlobalConfig::default()).diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::jones;
    use crate::moves::{apply_move, random_mix};
    use crate::samples;

    #[test]
    fn certify_basics() {
        assert!(matches!(
            certify_unknot(&Diagram::unknot(), &CertifyBudget::default()),
            Certification::Yes { .. }
        ));
        assert!(matches!(
            certify_unknot(&samples::trefoil(), &CertifyBudget::default()),
            Certification::NotUnknot { .. }
        ));
        let mixed = random_mix(&Diagram::unknot(), 4, 12, 10);
        match certify_unknot(&mixed, &CertifyBudget::default()) {
            Certification::Yes { trace } => {
                let mut cur = mixed.clone();
                for m in &trace {
                    cur = apply_move(&cur, m).unwrap();
                }
                assert_eq!(cur.n(), 0, "certificate must replay to the trivial diagram");
            }
            other => panic!("mixed unknot not certified: {other:?}"),
        }
    }

    #[test]
    fn env_trefoil_single_switch() {
        let mut env = env_reset(&samples::trefoil(), EnvConfig::default());
        assert!(!env.done());
        let (r, done) = env.step(0).unwrap();
        assert!(done);
        assert_eq!(r, 1.0);
        let t = env.trajectory();
        assert_eq!(t.outcome, Outcome::Unknotted);
        assert_eq!(t.reduced, vec![0]);
    }

    #[test]
    fn env_unknot_is_done_at_reset() {
        let env = env_reset(&Diagram::unknot(), EnvConfig::default());
        assert!(env.done());
        let t = env.trajectory();
        assert_eq!(t.outcome, Outcome::Unknotted);
        assert!(t.reduced.is_empty());
    }

    #[test]
    fn per_switch_reward_is_minus_one() {
        let cfg = EnvConfig { reward: RewardScheme::PerSwitch, ..EnvConfig::default() };
        let mut env = env_reset(&samples::trefoil(), cfg);
        let (r, done) = env.step(1).unwrap();
        assert!(done);
        assert_eq!(r, -1.0);
    }

    #[test]
    fn revisit_filter_masks_seen_polynomials() {
        let cfg = EnvConfig { revisit: RevisitMode::Both, ..EnvConfig::default() };
        let d = samples::figure_eight();
        let env = env_reset(&d, cfg.clone());
        // 4_1 is amphichiral and every switch unknots it, so all lookaheads
        // lead to fresh (trivial-polynomial) states
        assert_eq!(env.allowed_actions().len(), 4);
        // from the unknot-with-structure side: all switches lead back to
        // states already seen when they reproduce the start polynomial
        let none = EnvConfig { revisit: RevisitMode::None, ..EnvConfig::default() };
        assert_eq!(env_reset(&d, none).allowed_actions().len(), 4);
    }

    #[test]
    fn brute_force_trefoil_and_unknot() {
        let b = CertifyBudget::default();
        let r = brute_force_min_unknotting(&samples::trefoil(), 3, &b, 10_000).unwrap();
        assert_eq!(r.min_size, Some(1));
        assert_eq!(r.sets, vec![vec![0], vec![1], vec![2]]);
        assert!(!r.any_unknown);
        let r0 = brute_force_min_unknotting(&Diagram::unknot(), 2, &b, 100).unwrap();
        assert_eq!(r0.min_size, Some(0));
        let cap = brute_force_min_unknotting(&samples::trefoil(), 3, &b, 1);
        assert!(matches!(cap, Err(KnotError::WorkCapExceeded { .. })));
    }

    #[test]
    fn brute_force_torus_five() {
        let b = crate::braid::BraidWord::new(2, vec![1, 1, 1, 1, 1]).unwrap();
        let d = crate::braid::closure(&b).unwrap();
        let r =
            brute_force_min_unknotting(&d, 3, &CertifyBudget::default(), 100_000).unwrap();
        assert_eq!(r.min_size, Some(2));
    }

    #[test]
    fn strategies_unknot_trefoil() {
        let cfg = EnvConfig::default();
        for s in [
            Strategy::Random,
            Strategy::SimplifyRandom,
            Strategy::SimplifyMinCrossing,
            Strategy::WeightedRandom([90, 1, 90, 1, 50, 10]),
        ] {
            let t = run_strategy(&samples::trefoil(), &s, 1, 5, &cfg);
            assert_eq!(t.outcome, Outcome::Unknotted, "{s:?}");
            assert_eq!(t.reduced.len(), 1, "{s:?} took {:?}", t.reduced);
        }
    }

    #[test]
    fn strategy_determinism_and_soundness() {
        let d = random_mix(&samples::trefoil(), 8, 10, 9);
        let cfg = EnvConfig::default();
        for s in [Strategy::Random, Strategy::SimplifyMinCrossing] {
            let a = run_strategy(&d, &s, 5, 3, &cfg);
            let b = run_strategy(&d, &s, 5, 3, &cfg);
            assert_eq!(a, b, "{s:?} is not deterministic");
            if a.outcome == Outcome::Unknotted {
                let mut replay = d.clone();
                for &i in &a.reduced {
                    replay = replay.change_crossing(i).unwrap();
                }
                assert!(matches!(
                    certify_unknot(&replay, &cfg.certify),
                    Certification::Yes { .. }
                ));
            }
        }
    }

    #[test]
    fn q_learning_solves_trefoil() {
        let cfg = QLearningConfig { episodes: 100, ..QLearningConfig::default() };
        let table = q_train(&[samples::trefoil()], &cfg, 3);
        for (_, v) in &table.q {
            assert!((0.0..=1.0).contains(v), "Q value {v} out of [0,1]");
        }
        let t = q_solve(&samples::trefoil(), &table, &EnvConfig::default());
        assert_eq!(t.outcome, Outcome::Unknotted);
        assert_eq!(t.reduced.len(), 1);
    }

    #[test]
    fn gamma_zero_keeps_immediate_rewards() {
        let cfg = QLearningConfig { gamma: 0.0, episodes: 50, ..QLearningConfig::default() };
        let table = q_train(&[samples::trefoil()], &cfg, 1);
        for (_, v) in &table.q {
            assert!((0.0..=1.0).contains(v));
        }
    }

    #[test]
    fn intermediate_endpoints() {
        let d = samples::trefoil();
        let full = trajectory_intermediate(&d, &[0], 1).unwrap();
        assert_eq!(full.n(), 0);
        let none = trajectory_intermediate(&d, &[0], 0).unwrap();
        assert_eq!(jones(&none).unwrap(), jones(&d).unwrap());
        assert!(trajectory_intermediate(&d, &[0], 2).is_err());
    }

    #[test]
    fn signature_bound_on_torus_knots() {
        let b = crate::braid::BraidWord::new(2, vec![1, 1, 1, 1, 1]).unwrap();
        let d = crate::braid::closure(&b).unwrap();
        assert_eq!(signature_lower_bound(&d), 2);
        assert_eq!(signature_lower_bound(&samples::trefoil()), 1);
    }

    #[test]
    fn forced_crossings_reported() {
        let cfg = EnvConfig { forced: vec![0], ..EnvConfig::default() };
        let mut env = env_reset(&samples::trefoil(), cfg.clone());
        env.step(0).unwrap();
        assert_eq!(env.trajectory().forced_satisfied, Some(true));
        let mut env = env_reset(&samples::trefoil(), cfg);
        env.step(1).unwrap();
        assert_eq!(env.trajectory().forced_satisfied, Some(false));
    }
}
