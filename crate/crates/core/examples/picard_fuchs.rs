//! Small I-function of each preset and its annihilation by both
//! Picard-Fuchs operators.

use std::time::Instant;

use quasimap::ifunction::small_i_function;
use quasimap::picard_fuchs::verify_annihilation;
use quasimap::{ClassRing, Preset};

fn main() -> quasimap::Result<()> {
    let trunc = (5, 3);
    for p in Preset::ALL {
        let t = Instant::now();
        let ring = ClassRing::preset(p);
        let i = small_i_function(&ring, trunc, (-6, 4))?;
        print!("{:<14} dim H = {}  ", p.name(), ring.dim());
        for a in verify_annihilation(&ring.geometry, &i)? {
            match a.first_nonzero {
                None => print!("op{}: 0  ", a.operator),
                Some((d, m)) => print!("op{}: nonzero at q^{d:?} z^{m}  ", a.operator),
            }
        }
        println!("({:.2?})", t.elapsed());
    }
    Ok(())
}
