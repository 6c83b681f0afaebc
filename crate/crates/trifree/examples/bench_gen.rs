use std::time::Instant;
fn main() {
    let t0 = Instant::now();
    let r = trifree::enumerate::verify_theorem3(13, 1).unwrap();
    println!(
        "theorem3 n<=13: scanned {} t0_hits {:?} pass {} in {:?}",
        r.scanned, r.gamma, r.pass, t0.elapsed()
    );
}
