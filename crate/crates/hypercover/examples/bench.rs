use hypercover::covers::{CoverSpec, TargetSet};
use hypercover::oracle::{epc_oracle, ehc_oracle, OracleOptions};
use hypercover::sym::{self, PointSet, SymmetricSet};
use std::time::Instant;

fn punctured(n: usize, hole: &[u8]) -> TargetSet {
    let pts = sym::cube_points(n).into_iter().filter(|x| x != hole);
    TargetSet::Points(PointSet::new(n, pts).unwrap())
}

fn main() {
    let opts = OracleOptions::default();
    // SW worst case: n=4, t=3, ell=2 -> degree 8
    let t0 = Instant::now();
    let spec = CoverSpec::exact(punctured(4, &[0, 0, 0, 0]), 3, 2).unwrap();
    let r = epc_oracle(&spec, &opts).unwrap();
    println!("epc n=4 t=3 ell=2: value={} in {:?}", r.value, t0.elapsed());

    // SW n=4 t=3 ell=1 -> n+2t-3 = 7
    let t0 = Instant::now();
    let spec = CoverSpec::exact(punctured(4, &[0, 0, 0, 0]), 3, 1).unwrap();
    let r = epc_oracle(&spec, &opts).unwrap();
    println!("epc n=4 t=3 ell=1: value={} in {:?}", r.value, t0.elapsed());

    // ehc n=4 t=2 ell=1 on complement of a small symmetric set
    let t0 = Instant::now();
    let s = SymmetricSet::new(4, [0usize]).unwrap();
    let spec = CoverSpec::exact(TargetSet::Sym(s.complement()), 2, 1).unwrap();
    let r = ehc_oracle(&spec, &opts).unwrap();
    println!("ehc n=4 t=2 ell=1 (comp of origin): value={} in {:?}", r.value, t0.elapsed());

    // ehc n=4 t=2 on a mid-size target
    let t0 = Instant::now();
    let s = SymmetricSet::new(4, [0usize, 2]).unwrap();
    let spec = CoverSpec::exact(TargetSet::Sym(s.complement()), 2, 1).unwrap();
    let r = ehc_oracle(&spec, &opts).unwrap();
    println!("ehc n=4 t=2 ell=1 (comp of {{0,2}}): value={} in {:?}", r.value, t0.elapsed());

    // clifton-huang (2,3): ehc = 2 + 3 = 5
    let t0 = Instant::now();
    let spec = CoverSpec::exact(punctured(2, &[0, 0]), 3, 0).unwrap();
    let r = ehc_oracle(&spec, &opts).unwrap();
    println!("ehc n=2 t=3 ell=0: value={} in {:?}", r.value, t0.elapsed());

    // clifton-huang (3,2): ehc = 3 + 1 = 4
    let t0 = Instant::now();
    let spec = CoverSpec::exact(punctured(3, &[0, 0, 0]), 2, 0).unwrap();
    let r = ehc_oracle(&spec, &opts).unwrap();
    println!("ehc n=3 t=2 ell=0: value={} in {:?}", r.value, t0.elapsed());

    let t0 = Instant::now();
    let flats = hypercover::oracle::enumerate_cube_flats(4).unwrap();
    println!("flats n=4: {} in {:?}", flats.len(), t0.elapsed());
    let t0 = Instant::now();
    let flats = hypercover::oracle::enumerate_cube_flats(5).unwrap();
    println!("flats n=5: {} in {:?}", flats.len(), t0.elapsed());
}
