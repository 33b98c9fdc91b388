//! Randomized and fixture-sweep property suites. Each returns the number of
//! cases checked, or a description of the first counterexample.

use std::sync::Arc;

use cohodist::complex::{barycentric_subdivision, product, SimplicialComplex, Subcomplex};
use cohodist::distance::{lower_bound, subdivision_monotonicity_check, verify, DistanceQuery};
use cohodist::exactalg::{CoeffRing, EuclideanRing, Integers, PrimeField, Rationals};
use cohodist::fixtures;
use cohodist::homology::{
    graded_module, induced_map, induced_map_between, pullback_cochain, ChainComplexData, Variance,
};
use cohodist::ring::{ideal_generators, j_generators, lcp_ideal, lcp_of_set, CohomologyClass, CohomologyRing, Square};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{random_complex, random_cover, random_image, random_pair, rng};

pub type Outcome = Result<usize, String>;

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

pub fn boundary_squares_to_zero(cases: usize) -> Outcome {
    let mut rng = rng(1);
    for case in 0..cases {
        let k = random_complex(&mut rng, 7, 4);
        let chains = ChainComplexData::new(&k);
        for d in 2..=k.dim() {
            let z = Integers;
            let dd = chains.boundary_matrix(&z, d - 1).mul(&z, &chains.boundary_matrix(&z, d));
            check(dd.is_zero(&z), || format!("case {case}: ∂∂ ≠ 0 in degree {d} on {:?}", k.labeled_facets()))?;
        }
    }
    Ok(cases)
}

fn functorial_in<R: EuclideanRing>(ring: &R, rng: &mut ChaCha8Rng, variance: Variance) -> Result<(), String> {
    let k = random_complex(rng, 7, 3);
    let f = random_image(rng, &k, 6);
    let g = random_image(rng, f.target(), 5);
    let gf = g.compose(&f).map_err(|e| e.to_string())?;
    let (hk, hl, hm) = (
        graded_module(&k, ring, variance),
        graded_module(f.target(), ring, variance),
        graded_module(g.target(), ring, variance),
    );
    let fs = induced_map_between(&f, &hk, &hl).map_err(|e| e.to_string())?;
    let gs = induced_map_between(&g, &hl, &hm).map_err(|e| e.to_string())?;
    let gfs = induced_map_between(&gf, &hk, &hm).map_err(|e| e.to_string())?;
    let n = fs.degrees.len().min(gs.degrees.len()).min(gfs.degrees.len());
    for m in 0..n {
        let composed = match variance {
            Variance::Cohomology => fs.degrees[m].compose(&gs.degrees[m]),
            Variance::Homology => gs.degrees[m].compose(&fs.degrees[m]),
        }
        .map_err(|e| e.to_string())?;
        let eq = cohodist::exactalg::homs_equal(&composed, &gfs.degrees[m]).map_err(|e| e.to_string())?;
        check(eq, || format!("{variance} functoriality fails in degree {m} on {:?}", k.labeled_facets()))?;
    }
    Ok(())
}

pub fn functoriality(cases: usize) -> Outcome {
    let mut rng = rng(2);
    let z2 = PrimeField::new(2).unwrap();
    for case in 0..cases {
        let variance = if case % 2 == 0 { Variance::Cohomology } else { Variance::Homology };
        match case % 3 {
            0 => functorial_in(&Integers, &mut rng, variance),
            1 => functorial_in(&z2, &mut rng, variance),
            _ => functorial_in(&Rationals, &mut rng, variance),
        }
        .map_err(|e| format!("case {case}: {e}"))?;
    }
    Ok(cases)
}

fn random_class<R: EuclideanRing>(h: &CohomologyRing<R>, rng: &mut ChaCha8Rng, m: usize) -> Option<CohomologyClass<R>> {
    let gens = h.generators(m);
    if gens.is_empty() {
        return None;
    }
    let ring = h.ring();
    let mut acc = h.zero(m);
    for g in &gens {
        let c = ring.from_i64(rng.gen_range(-2..=2));
        acc = h.add(&acc, &h.scale(g, &c)).ok()?;
    }
    Some(acc)
}

fn cup_laws_in<R: EuclideanRing>(ring: &R, rng: &mut ChaCha8Rng, k: &Arc<SimplicialComplex>) -> Result<(), String> {
    let h = CohomologyRing::new(k, ring);
    let err = |e: cohodist::ring::RingError| e.to_string();
    let degs: Vec<usize> = (1..=h.dim()).filter(|&m| !h.generators(m).is_empty()).collect();
    if degs.is_empty() {
        return Ok(());
    }
    let pick = |rng: &mut ChaCha8Rng| degs[rng.gen_range(0..degs.len())];
    let (p, q, r) = (pick(rng), pick(rng), pick(rng));
    let (a, b, c) =
        (random_class(&h, rng, p).unwrap(), random_class(&h, rng, q).unwrap(), random_class(&h, rng, r).unwrap());
    // graded commutativity
    let ab = h.cup(&a, &b).map_err(err)?;
    let ba = h.cup(&b, &a).map_err(err)?;
    let sign = if (p * q) % 2 == 0 { ring.one() } else { ring.neg(&ring.one()) };
    check(h.classes_equal(&ab, &h.scale(&ba, &sign)).map_err(err)?, || format!("a⌣b ≠ ±b⌣a in degrees {p},{q}"))?;
    // associativity
    let left = h.cup(&ab, &c).map_err(err)?;
    let right = h.cup(&a, &h.cup(&b, &c).map_err(err)?).map_err(err)?;
    check(h.classes_equal(&left, &right).map_err(err)?, || format!("cup not associative in degrees {p},{q},{r}"))?;
    // naturality along a random map into k
    let src = random_complex(rng, 6, 3);
    let f = random_pullback_map(rng, &src, k);
    if let Some(f) = f {
        let hs = CohomologyRing::new(&src, ring);
        let pull = |x: &CohomologyClass<R>| hs.class(x.degree(), pullback_cochain(ring, &f, x.degree(), x.cochain()));
        let lhs = pull(&ab).map_err(err)?;
        let rhs = hs.cup(&pull(&a).map_err(err)?, &pull(&b).map_err(err)?).map_err(err)?;
        check(hs.classes_equal(&lhs, &rhs).map_err(err)?, || "f*(a⌣b) ≠ f*a⌣f*b".to_string())?;
    }
    Ok(())
}

/// A simplicial map `src -> k` sending each vertex of `src` to a random
/// vertex of a random facet of `k`, kept when simplicial.
fn random_pullback_map(
    rng: &mut ChaCha8Rng,
    src: &Arc<SimplicialComplex>,
    k: &Arc<SimplicialComplex>,
) -> Option<cohodist::complex::SimplicialMap> {
    for _ in 0..50 {
        let asg: Vec<u32> = (0..src.vertex_count()).map(|_| rng.gen_range(0..k.vertex_count() as u32)).collect();
        if let Ok(f) = cohodist::complex::SimplicialMap::new(src.clone(), k.clone(), asg) {
            return Some(f);
        }
    }
    None
}

pub fn cup_laws(cases: usize) -> Outcome {
    let mut rng = rng(3);
    let z2 = PrimeField::new(2).unwrap();
    let pool =
        [fixtures::rp2_6(), fixtures::s2_4(), product(&fixtures::c3(), &fixtures::c3()).complex, fixtures::c3_x_s2_4()];
    for case in 0..cases {
        let k = if case % 4 == 3 { random_complex(&mut rng, 6, 3) } else { pool[case % pool.len()].clone() };
        match case % 3 {
            0 => cup_laws_in(&Integers, &mut rng, &k),
            1 => cup_laws_in(&z2, &mut rng, &k),
            _ => cup_laws_in(&Rationals, &mut rng, &k),
        }
        .map_err(|e| format!("case {case} on {:?}: {e}", k.labeled_facets()))?;
    }
    Ok(cases)
}

fn lcp_ideal_in<R: EuclideanRing>(ring: &R, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let k = random_complex(rng, 7, 3);
    let (phi, psi) = random_pair(rng, &k, 5);
    let h = CohomologyRing::new(&k, ring);
    let t = CohomologyRing::new(phi.target(), ring);
    let err = |e: cohodist::ring::RingError| e.to_string();
    let j = j_generators(&phi, &psi, &h, &t).map_err(err)?;
    let a = lcp_of_set(&h, &j).map_err(err)?.length;
    let b = lcp_ideal(&h, &j).map_err(err)?;
    check(a == b, || format!("lcp J = {a} but lcp <J> = {b} on {:?}", k.labeled_facets()))
}

pub fn lcp_equals_ideal_lcp(cases: usize) -> Outcome {
    let mut rng = rng(4);
    let z2 = PrimeField::new(2).unwrap();
    for case in 0..cases {
        match case % 3 {
            0 => lcp_ideal_in(&Integers, &mut rng),
            1 => lcp_ideal_in(&z2, &mut rng),
            _ => lcp_ideal_in(&Rationals, &mut rng),
        }
        .map_err(|e| format!("case {case}: {e}"))?;
    }
    // fixture sweep: (id, c) on the manifolds
    for k in [fixtures::rp2_6(), fixtures::rp3_11(), fixtures::c3_x_s2_4()] {
        let h = CohomologyRing::new(&k, &z2);
        let j = h.positive_generators();
        let (a, b) = (lcp_of_set(&h, &j).unwrap().length, lcp_ideal(&h, &j).unwrap());
        check(a == b, || format!("fixture with {} vertices: {a} vs {b}", k.vertex_count()))?;
    }
    Ok(cases + 3)
}

pub fn field_variance_equivalence(cases: usize) -> Outcome {
    let mut rng = rng(5);
    for case in 0..cases {
        let k = random_complex(&mut rng, 7, 3);
        let (phi, psi) = random_pair(&mut rng, &k, 5);
        let ring = if case % 2 == 0 { CoeffRing::PrimeField(2) } else { CoeffRing::Rationals };
        let co = DistanceQuery::new(phi, psi, ring, Variance::Cohomology).unwrap();
        let ho = co.clone().with_variance(Variance::Homology);
        let size = rng.gen_range(1..=3);
        let cover = random_cover(&mut rng, &k, size);
        let (a, b) = (verify(&co, &cover).unwrap(), verify(&ho, &cover).unwrap());
        let va: Vec<Vec<bool>> = a.pieces.iter().map(|p| p.per_degree.clone()).collect();
        let vb: Vec<Vec<bool>> = b.pieces.iter().map(|p| p.per_degree.clone()).collect();
        check(va == vb && a.verified == b.verified, || {
            format!("case {case} over {ring}: cohomology {va:?} vs homology {vb:?} on {:?}", k.labeled_facets())
        })?;
    }
    Ok(cases)
}

/// `dim_F span(A) = dim_F span(B) = dim_F span(A ∪ B)`.
fn same_span<R: EuclideanRing>(h: &CohomologyRing<R>, a: &[CohomologyClass<R>], b: &[CohomologyClass<R>]) -> bool {
    let ra = h.reduce(a).unwrap().len();
    let rb = h.reduce(b).unwrap().len();
    let both: Vec<CohomologyClass<R>> = a.iter().chain(b).cloned().collect();
    ra == rb && rb == h.reduce(&both).unwrap().len()
}

pub fn zero_divisor_ideal_is_cup_kernel() -> Outcome {
    let z2 = PrimeField::new(2).unwrap();
    let mut n = 0;
    for (name, k) in [("S2", fixtures::s2_4()), ("C3", fixtures::c3())] {
        let sq = Square::new(&k, &z2);
        let ideal = ideal_generators(&sq.ring, &sq.j_generators().unwrap()).unwrap();
        let kernel = sq.cup_kernel().unwrap();
        check(same_span(&sq.ring, &ideal, &kernel), || format!("<J> ≠ ker ⌣ on {name}"))?;
        n += 1;
    }
    Ok(n)
}

fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn kunneth_betti(random_cases: usize) -> Outcome {
    let z2 = PrimeField::new(2).unwrap();
    let mut pairs: Vec<(Arc<SimplicialComplex>, Arc<SimplicialComplex>)> = vec![
        (fixtures::c3(), fixtures::s2_4()),
        (fixtures::s2_4(), fixtures::s2_4()),
        (fixtures::c3(), fixtures::c3()),
        (fixtures::rp2_6(), fixtures::c3()),
    ];
    let mut rng = rng(6);
    for _ in 0..random_cases {
        pairs.push((random_complex(&mut rng, 5, 2), random_complex(&mut rng, 4, 2)));
    }
    for (i, (k, l)) in pairs.iter().enumerate() {
        let p = product(k, l).complex;
        let check_ring = |betti: &dyn Fn(&Arc<SimplicialComplex>) -> Vec<usize>| {
            let mut expect = convolve(&betti(k), &betti(l));
            let mut got = betti(&p);
            expect.resize(got.len().max(expect.len()), 0);
            got.resize(expect.len(), 0);
            (expect, got)
        };
        let (e2, g2) = check_ring(&|x| graded_module(x, &z2, Variance::Cohomology).free_ranks());
        check(e2 == g2, || format!("pair {i} over Z2: expected {e2:?}, got {g2:?}"))?;
        let (eq, gq) = check_ring(&|x| graded_module(x, &Rationals, Variance::Homology).free_ranks());
        check(eq == gq, || format!("pair {i} over Q: expected {eq:?}, got {gq:?}"))?;
    }
    Ok(pairs.len())
}

pub fn subdivision_isomorphisms(random_cases: usize) -> Outcome {
    let z2 = PrimeField::new(2).unwrap();
    let mut ks: Vec<Arc<SimplicialComplex>> = vec![
        fixtures::rp2_6(),
        fixtures::s2_4(),
        fixtures::c3(),
        fixtures::k5(),
        fixtures::triangle(),
        fixtures::point(),
    ];
    let mut rng = rng(7);
    for _ in 0..random_cases {
        ks.push(random_complex(&mut rng, 6, 3));
    }
    for (i, k) in ks.iter().enumerate() {
        let sd = barycentric_subdivision(k);
        check(sd.complex().euler_characteristic() == k.euler_characteristic(), || format!("complex {i}: χ changes"))?;
        let ok = match i % 3 {
            0 => induced_map(sd.carrier(), &Integers, Variance::Cohomology).is_isomorphism(),
            1 => induced_map(sd.carrier(), &z2, Variance::Cohomology).is_isomorphism(),
            _ => induced_map(sd.carrier(), &Integers, Variance::Homology).is_isomorphism(),
        };
        check(ok, || format!("complex {i}: carrier not an isomorphism on {:?}", k.labeled_facets()))?;
    }
    Ok(ks.len())
}

/// Cohomology lower bound never exceeds a verified certificate, on random
/// queries with random covers and on the fixture covers.
pub fn lower_bound_below_certificates(cases: usize) -> Outcome {
    let mut rng = rng(8);
    let mut verified = 0;
    for case in 0..cases {
        let k = random_complex(&mut rng, 6, 3);
        let (phi, psi) = random_pair(&mut rng, &k, 4);
        let ring = [CoeffRing::PrimeField(2), CoeffRing::Rationals, CoeffRing::Integers][case % 3];
        let q = DistanceQuery::new(phi, psi, ring, Variance::Cohomology).unwrap();
        let size = rng.gen_range(1..=4);
        let cover = random_cover(&mut rng, &k, size);
        let cert = verify(&q, &cover).unwrap();
        if cert.verified {
            verified += 1;
            let lb = lower_bound(&q).unwrap().value;
            check(lb <= cert.bound(), || format!("case {case}: lower {lb} > certificate {}", cert.bound()))?;
        }
    }
    for (query, cover) in fixture_certificates() {
        let cert = verify(&query, &cover).unwrap();
        check(cert.verified, || "fixture certificate does not verify".into())?;
        if query.variance == Variance::Homology {
            continue;
        }
        check(lower_bound(&query).unwrap().value <= cert.bound(), || "fixture lower bound exceeds certificate".into())?;
        verified += 1;
    }
    Ok(verified)
}

/// The verified covers shipped as fixtures, with their queries.
pub fn fixture_certificates() -> Vec<(DistanceQuery, cohodist::complex::Cover)> {
    let z2 = CoeffRing::PrimeField(2);
    let mut out = Vec::new();
    for (name, on) in [("cp2", "cp2_9"), ("rp3", "rp3_11"), ("s1xs2", "c3xs2_4"), ("k5", "k5")] {
        let k = fixtures::complex(on).unwrap();
        out.push((DistanceQuery::scat(&k, z2), fixtures::cover(name).unwrap()));
    }
    let iota = fixtures::rp2_loop();
    let c = cohodist::complex::SimplicialMap::constant_first(iota.source().clone(), iota.target().clone());
    let ho = DistanceQuery::new(iota, c, CoeffRing::Integers, Variance::Homology).unwrap();
    out.push((ho, fixtures::cover("c3_homology").unwrap()));
    out
}

pub fn subdivision_monotonicity() -> Outcome {
    let mut n = 0;
    for (query, cover) in fixture_certificates() {
        let ok = subdivision_monotonicity_check(&query, &cover).map_err(|e| e.to_string())?;
        check(ok, || format!("subdivided cover on {} vertices fails", query.source().vertex_count()))?;
        n += 1;
    }
    Ok(n)
}

/// A verified cover stays verified when a subcomplex of one of its pieces
/// is appended.
pub fn verified_cover_monotone(cases: usize) -> Outcome {
    let mut rng = rng(9);
    let certs = fixture_certificates();
    for case in 0..cases {
        let (query, cover) = &certs[case % certs.len()];
        let piece = &cover.pieces()[rng.gen_range(0..cover.len())];
        let facets = piece.facets_in_parent();
        let keep: Vec<_> = facets.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        let keep = if keep.is_empty() { vec![facets[0].clone()] } else { keep };
        let extra = Subcomplex::generated_by(query.source().clone(), &keep).unwrap();
        let bigger = cover.with_piece(extra, "extra").unwrap();
        check(verify(query, &bigger).unwrap().verified, || format!("case {case}: extra piece broke the certificate"))?;
    }
    Ok(cases)
}
