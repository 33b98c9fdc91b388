use std::sync::Arc;

use super::{Label, Simplex, SimplicialComplex, SimplicialMap};

/// Staircase triangulation of `K × L` with its two projections.
#[derive(Clone, Debug)]
pub struct Product {
    pub complex: Arc<SimplicialComplex>,
    pub proj1: SimplicialMap,
    pub proj2: SimplicialMap,
}

/// Vertex `(u, v)` has index `u·|L| + v`, so the lexicographic vertex order
/// refines the product partial order and every monotone chain is sorted.
pub fn product(k: &Arc<SimplicialComplex>, l: &Arc<SimplicialComplex>) -> Product {
    let nl = l.vertex_count() as u32;
    let labels: Vec<Label> =
        k.labels().iter().flat_map(|a| l.labels().iter().map(move |b| Label::pair(a, b))).collect();
    let mut faces = Vec::new();
    for s in k.facets() {
        for t in l.facets() {
            staircases(s, t, &mut |path| faces.push(path.iter().map(|&(i, j)| s[i] * nl + t[j]).collect::<Simplex>()));
        }
    }
    let complex = Arc::new(SimplicialComplex::from_indexed(labels, faces, false).expect("product of valid complexes"));
    let n = complex.vertex_count() as u32;
    let proj1 = SimplicialMap::new(complex.clone(), k.clone(), (0..n).map(|v| v / nl).collect()).expect("projection");
    let proj2 = SimplicialMap::new(complex.clone(), l.clone(), (0..n).map(|v| v % nl).collect()).expect("projection");
    Product { complex, proj1, proj2 }
}

/// Calls `emit` on every lattice path from (0,0) to (|s|-1, |t|-1).
fn staircases(s: &[u32], t: &[u32], emit: &mut impl FnMut(&[(usize, usize)])) {
    fn walk(p: usize, q: usize, path: &mut Vec<(usize, usize)>, emit: &mut impl FnMut(&[(usize, usize)])) {
        let &(i, j) = path.last().expect("path starts at the origin");
        if i == p && j == q {
            emit(path);
            return;
        }
        if i < p {
            path.push((i + 1, j));
            walk(p, q, path, emit);
            path.pop();
        }
        if j < q {
            path.push((i, j + 1));
            walk(p, q, path, emit);
            path.pop();
        }
    }
    let mut path = vec![(0, 0)];
    walk(s.len() - 1, t.len() - 1, &mut path, emit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(faces: &[&[u32]]) -> Arc<SimplicialComplex> {
        Arc::new(SimplicialComplex::from_maximal_faces(faces.iter().map(|f| f.to_vec())).unwrap())
    }

    #[test]
    fn staircase_counts() {
        let c3 = arc(&[&[0, 1], &[1, 2], &[0, 2]]);
        let s2 = arc(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let p = product(&c3, &s2);
        assert_eq!(p.complex.dim(), 3);
        assert_eq!(p.complex.count(3), 36);
        assert_eq!(p.complex.euler_characteristic(), 0);
        let q = product(&s2, &s2);
        assert_eq!(q.complex.count(4), 96);
        assert_eq!(q.complex.euler_characteristic(), 4);
        let v = q.complex.vertex(&Label::from("1,3")).unwrap();
        assert_eq!((q.proj1.apply(v), q.proj2.apply(v)), (1, 3));
    }

    #[test]
    fn point_times_k() {
        let pt = arc(&[&[0]]);
        let k = arc(&[&[0, 1, 2], &[2, 3]]);
        let p = product(&pt, &k);
        assert_eq!(p.complex.f_vector(), k.f_vector());
        assert_eq!(p.proj2.assignment(), &[0, 1, 2, 3]);
    }
}
