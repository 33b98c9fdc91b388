use std::collections::HashMap;
use std::str::FromStr;
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::engine::Engine;
use super::{verify, DistanceError, DistanceQuery};
use crate::complex::{Cover, Simplex};
use crate::exactalg::EuclideanRing;
use crate::with_ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Exhaustive,
    Greedy,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "exhaustive" => Ok(Strategy::Exhaustive),
            "greedy" => Ok(Strategy::Greedy),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub size: usize,
    pub strategy: Strategy,
    /// Exhaustive search refuses when `size^#facets` exceeds this.
    pub budget: u64,
    pub seed: u64,
    pub restarts: usize,
    pub repair_steps: usize,
    /// Greedy search starts from these facet-to-piece lists when given.
    pub warm_start: Option<Vec<Vec<Simplex>>>,
}

impl SearchOptions {
    pub fn new(size: usize, strategy: Strategy) -> Self {
        SearchOptions { size, strategy, budget: 1 << 24, seed: 0, restarts: 64, repair_steps: 200, warm_start: None }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchStats {
    /// Obstruction evaluations (cache misses).
    pub evaluations: usize,
    /// Exhaustive: assignments visited; greedy: restarts used.
    pub explored: u64,
}

/// Searches for a cover of `size` pieces on which the maps agree.
///
/// Pieces are generated by sets of maximal faces, and every facet goes to
/// exactly one piece. Since agreement on a piece passes to its subcomplexes,
/// any valid cover shrinks to such a partition, so an exhaustive `None` rules
/// out every subcomplex cover of that size. Returned covers are re-verified
/// and may have fewer nonempty pieces than `size`.
pub fn search(query: &DistanceQuery, opts: &SearchOptions) -> Result<Option<Cover>, DistanceError> {
    Ok(search_with_stats(query, opts)?.0)
}

pub fn search_with_stats(
    query: &DistanceQuery,
    opts: &SearchOptions,
) -> Result<(Option<Cover>, SearchStats), DistanceError> {
    if opts.size == 0 {
        return Err(DistanceError::ZeroSize);
    }
    let facets = query.source().facets().to_vec();
    if opts.strategy == Strategy::Exhaustive {
        let candidates = (opts.size as f64).powi(facets.len() as i32);
        if candidates > opts.budget as f64 {
            let exact = num_bigint::BigUint::from(opts.size).pow(facets.len() as u32);
            return Err(DistanceError::BudgetExceeded { candidates: exact.to_string(), budget: opts.budget });
        }
    }
    let (assignment, stats) = with_ring!(query.ring, |r| {
        let state = Search::new(&r, query, facets.clone());
        let found = match opts.strategy {
            Strategy::Exhaustive => state.exhaustive(opts.size),
            Strategy::Greedy => state.greedy(opts),
        };
        (found, state.stats())
    });
    let Some(assignment) = assignment else { return Ok((None, stats)) };
    let mut pieces: Vec<Vec<Simplex>> = vec![Vec::new(); opts.size];
    for (f, &p) in facets.iter().zip(&assignment) {
        pieces[p].push(f.clone());
    }
    pieces.retain(|p| !p.is_empty());
    let cover = Cover::from_facets(query.source().clone(), &pieces)?;
    let cert = verify(query, &cover)?;
    assert!(cert.verified, "search produced a cover that fails verification");
    Ok((Some(cover), stats))
}

struct Search<'a, R: EuclideanRing> {
    engine: Engine<R>,
    facets: Vec<Simplex>,
    cache: Mutex<HashMap<Vec<usize>, usize>>,
    explored: Mutex<u64>,
    _query: &'a DistanceQuery,
}

impl<'a, R: EuclideanRing> Search<'a, R> {
    fn new(ring: &R, query: &'a DistanceQuery, facets: Vec<Simplex>) -> Self {
        Search {
            engine: Engine::new(ring, &query.phi, &query.psi, query.variance),
            facets,
            cache: Mutex::new(HashMap::new()),
            explored: Mutex::new(0),
            _query: query,
        }
    }

    fn stats(&self) -> SearchStats {
        SearchStats { evaluations: self.cache.lock().unwrap().len(), explored: *self.explored.lock().unwrap() }
    }

    /// Obstruction of the piece generated by the given facet indices.
    fn obstruction(&self, members: &[usize]) -> usize {
        let mut key = members.to_vec();
        key.sort_unstable();
        if let Some(&v) = self.cache.lock().unwrap().get(&key) {
            return v;
        }
        let faces: Vec<Simplex> = key.iter().map(|&i| self.facets[i].clone()).collect();
        let v = self.engine.obstruction(&faces);
        self.cache.lock().unwrap().insert(key, v);
        v
    }

    /// Depth-first over assignments with symmetry breaking: facet `i` may
    /// open at most one new piece. A piece that fails is never extended.
    fn exhaustive(&self, size: usize) -> Option<Vec<usize>> {
        let mut assignment = Vec::with_capacity(self.facets.len());
        let mut pieces: Vec<Vec<usize>> = vec![Vec::new(); size];
        self.dfs(size, &mut assignment, &mut pieces).then_some(assignment)
    }

    fn dfs(&self, size: usize, assignment: &mut Vec<usize>, pieces: &mut [Vec<usize>]) -> bool {
        *self.explored.lock().unwrap() += 1;
        let i = assignment.len();
        if i == self.facets.len() {
            return true;
        }
        let opened = pieces.iter().filter(|p| !p.is_empty()).count();
        for j in 0..size.min(opened + 1) {
            pieces[j].push(i);
            if self.obstruction(&pieces[j]) == 0 {
                assignment.push(j);
                if self.dfs(size, assignment, pieces) {
                    return true;
                }
                assignment.pop();
            }
            pieces[j].pop();
        }
        false
    }

    /// First-fit construction followed by obstruction-decreasing moves,
    /// restarted from shuffled facet orders. Ties break on
    /// (obstruction, piece index, facet index).
    fn greedy(&self, opts: &SearchOptions) -> Option<Vec<usize>> {
        let n = self.facets.len();
        let size = opts.size;
        if let Some(warm) = &opts.warm_start {
            let index: HashMap<&Simplex, usize> = self.facets.iter().enumerate().map(|(i, f)| (f, i)).collect();
            let mut assign: Vec<Option<usize>> = vec![None; n];
            for (j, piece) in warm.iter().enumerate().take(size) {
                for f in piece {
                    if let Some(&i) = index.get(f) {
                        if assign[i].is_none() {
                            assign[i] = Some(j);
                        }
                    }
                }
            }
            let order: Vec<usize> = (0..n).collect();
            if let Some(a) = self.run(size, &order, Some(assign), opts, opts.seed) {
                return Some(a);
            }
        }
        for restart in 0..opts.restarts.max(1) {
            *self.explored.lock().unwrap() += 1;
            let mut order: Vec<usize> = (0..n).collect();
            if restart > 0 {
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(restart as u64));
                order.shuffle(&mut rng);
            }
            if let Some(a) = self.run(size, &order, None, opts, opts.seed.wrapping_add(restart as u64)) {
                return Some(a);
            }
        }
        None
    }

    fn run(
        &self,
        size: usize,
        order: &[usize],
        preset: Option<Vec<Option<usize>>>,
        opts: &SearchOptions,
        seed: u64,
    ) -> Option<Vec<usize>> {
        let n = self.facets.len();
        let mut assign: Vec<Option<usize>> = preset.unwrap_or_else(|| vec![None; n]);
        let mut pieces: Vec<Vec<usize>> = vec![Vec::new(); size];
        for (i, a) in assign.iter().enumerate() {
            if let Some(j) = a {
                pieces[*j].push(i);
            }
        }
        for &i in order {
            if assign[i].is_some() {
                continue;
            }
            let best = (0..size)
                .into_par_iter()
                .map(|j| {
                    let mut trial = pieces[j].clone();
                    trial.push(i);
                    (self.obstruction(&trial) as i64 - self.obstruction(&pieces[j]) as i64, j)
                })
                .min()
                .expect("size >= 1");
            pieces[best.1].push(i);
            assign[i] = Some(best.1);
        }
        let mut assign: Vec<usize> = assign.into_iter().map(|a| a.expect("assigned")).collect();
        let mut obs: Vec<usize> = pieces.iter().map(|p| self.obstruction(p)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        for _ in 0..opts.repair_steps {
            let total: usize = obs.iter().sum();
            if total == 0 {
                return Some(assign);
            }
            let cur = &assign;
            let moves: Vec<(usize, usize)> = (0..n)
                .filter(|&i| obs[cur[i]] > 0)
                .flat_map(|i| (0..size).filter(move |&j| j != cur[i]).map(move |j| (i, j)))
                .collect();
            let best = moves
                .par_iter()
                .map(|&(i, j)| {
                    let from = assign[i];
                    let shrunk: Vec<usize> = pieces[from].iter().copied().filter(|&x| x != i).collect();
                    let mut grown = pieces[j].clone();
                    grown.push(i);
                    let new_total = total - obs[from] - obs[j] + self.obstruction(&shrunk) + self.obstruction(&grown);
                    (new_total, j, i)
                })
                .min();
            match best {
                Some((new_total, j, i)) if new_total < total => self.apply(&mut assign, &mut pieces, &mut obs, i, j),
                _ => {
                    // plateau: move a random facet out of a failing piece
                    let failing: Vec<usize> = (0..n).filter(|&i| obs[assign[i]] > 0).collect();
                    if failing.is_empty() || size == 1 {
                        return None;
                    }
                    let i = failing[rng.gen_range(0..failing.len())];
                    let mut j = rng.gen_range(0..size - 1);
                    if j >= assign[i] {
                        j += 1;
                    }
                    self.apply(&mut assign, &mut pieces, &mut obs, i, j);
                }
            }
        }
        (obs.iter().sum::<usize>() == 0).then_some(assign)
    }

    fn apply(&self, assign: &mut [usize], pieces: &mut [Vec<usize>], obs: &mut [usize], i: usize, j: usize) {
        let from = assign[i];
        pieces[from].retain(|&x| x != i);
        pieces[j].push(i);
        assign[i] = j;
        obs[from] = self.obstruction(&pieces[from]);
        obs[j] = self.obstruction(&pieces[j]);
    }
}
