#![allow(dead_code)]

pub mod suites;

use std::sync::Arc;

use cohodist::complex::{ComplexBuilder, Cover, Simplex, SimplicialComplex, SimplicialMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Base seed of every randomized suite; override with `COHODIST_SEED`.
pub fn seed() -> u64 {
    std::env::var("COHODIST_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(20_26)
}

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// A connected complex on at most `n` vertices with faces of dimension at
/// most `max_dim`.
pub fn random_complex(rng: &mut ChaCha8Rng, n: u32, max_dim: usize) -> Arc<SimplicialComplex> {
    loop {
        let faces = random_faces(rng, n, max_dim);
        if let Ok(k) = SimplicialComplex::from_maximal_faces(faces) {
            return Arc::new(k);
        }
    }
}

pub fn random_faces(rng: &mut ChaCha8Rng, n: u32, max_dim: usize) -> Vec<Vec<u32>> {
    let count = rng.gen_range(2..=7);
    let verts: Vec<u32> = (0..n).collect();
    (0..count)
        .map(|_| {
            let size = rng.gen_range(2..=(max_dim + 1).min(n as usize));
            let mut f: Vec<u32> = verts.choose_multiple(rng, size).copied().collect();
            f.sort_unstable();
            f
        })
        .collect()
}

/// Image complex of `k` under a vertex assignment into `0..m`, together
/// with the map onto it.
pub fn random_image(rng: &mut ChaCha8Rng, k: &Arc<SimplicialComplex>, m: u32) -> SimplicialMap {
    let assignment: Vec<u32> = (0..k.vertex_count()).map(|_| rng.gen_range(0..m)).collect();
    let faces: Vec<Vec<String>> = k
        .facets()
        .iter()
        .map(|f| {
            let mut img: Vec<u32> = f.iter().map(|&v| assignment[v as usize]).collect();
            img.sort_unstable();
            img.dedup();
            img.iter().map(|v| v.to_string()).collect()
        })
        .collect();
    let l = Arc::new(ComplexBuilder::new().build(faces).expect("image of a connected complex"));
    let pairs: Vec<(String, String)> =
        (0..k.vertex_count()).map(|u| (k.label(u as u32).to_string(), assignment[u].to_string())).collect();
    SimplicialMap::from_labels(k.clone(), l, pairs).expect("simplicial by construction")
}

/// Two maps `K -> L` into the union of their images.
pub fn random_pair(rng: &mut ChaCha8Rng, k: &Arc<SimplicialComplex>, m: u32) -> (SimplicialMap, SimplicialMap) {
    let a: Vec<u32> = (0..k.vertex_count()).map(|_| rng.gen_range(0..m)).collect();
    let b: Vec<u32> = (0..k.vertex_count()).map(|_| rng.gen_range(0..m)).collect();
    let img = |asg: &[u32], f: &Simplex| -> Vec<String> {
        let mut i: Vec<u32> = f.iter().map(|&v| asg[v as usize]).collect();
        i.sort_unstable();
        i.dedup();
        i.iter().map(|v| v.to_string()).collect()
    };
    let mut faces: Vec<Vec<String>> = k.facets().iter().map(|f| img(&a, f)).collect();
    faces.extend(k.facets().iter().map(|f| img(&b, f)));
    let l = Arc::new(ComplexBuilder::new().allow_disconnected().build(faces).unwrap());
    let map = |asg: &[u32]| {
        let pairs: Vec<(String, String)> =
            (0..k.vertex_count()).map(|u| (k.label(u as u32).to_string(), asg[u].to_string())).collect();
        SimplicialMap::from_labels(k.clone(), l.clone(), pairs).unwrap()
    };
    (map(&a), map(&b))
}

/// A random partition of the facets into at most `size` nonempty pieces.
pub fn random_cover(rng: &mut ChaCha8Rng, k: &Arc<SimplicialComplex>, size: usize) -> Cover {
    let mut pieces: Vec<Vec<Simplex>> = vec![Vec::new(); size];
    for f in k.facets() {
        pieces[rng.gen_range(0..size)].push(f.clone());
    }
    pieces.retain(|p| !p.is_empty());
    Cover::from_facets(k.clone(), &pieces).unwrap()
}
