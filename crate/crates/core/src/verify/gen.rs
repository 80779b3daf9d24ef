//! Random inputs for the suite.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::btilde::z_word;
use crate::extension::GnElement;
use crate::words::BraidWord;

pub fn letters(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let k = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) { k } else { -k }
        })
        .collect()
}

pub fn word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    BraidWord::from_letters(n, letters(rng, n, len)).expect("letters in range")
}

/// A pure word: conjugates of `Z_ij^{+-2}` by short words, at most `max_len` letters.
pub fn pure_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let mut out = BraidWord::identity(n);
    for _ in 0..6 {
        let j = rng.gen_range(2..=n);
        let i = rng.gen_range(1..j);
        let sq = z_word(i, j, n).expect("valid pair").pow(if rng.gen_bool(0.5) { 2 } else { -2 });
        let c = word(rng, n, 3);
        let f = sq.conj(&c).expect("same strands");
        if out.len() + f.len() > max_len {
            break;
        }
        out = out.mul(&f).expect("same strands");
    }
    out
}

pub fn gn(rng: &mut ChaCha8Rng, n: usize) -> GnElement {
    let b = (1..n).map(|_| rng.gen_range(-3..=3)).collect();
    GnElement::from_parts(n, rng.gen_range(0..2), rng.gen_range(-3..=3), b).expect("sizes agree")
}
