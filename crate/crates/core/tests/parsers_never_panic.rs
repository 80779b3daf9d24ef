use std::path::Path;

use proptest::prelude::*;
use tildebraid::btilde::{parse_nf, parse_pure_factors};
use tildebraid::extension::{parse_g0, parse_gn};
use tildebraid::monodromy::parse_factorization;
use tildebraid::vankampen::{parse_presentation, parse_presentation_json};
use tildebraid::words::{parse_braid, parse_free};

fn feed(target: &str, s: &str) {
    match target {
        "parse_braid" => drop(parse_braid(s, 9)),
        "parse_free" => drop(parse_free(s, 9)),
        "parse_gn" => drop(parse_gn(s, 9)),
        "parse_g0" => drop(parse_g0(s)),
        "parse_nf" => drop(parse_nf(s, 9)),
        "parse_pure_factors" => drop(parse_pure_factors(s, 9)),
        "parse_factorization" => drop(parse_factorization(s)),
        "parse_presentation" => drop(parse_presentation(s)),
        "parse_presentation_json" => drop(parse_presentation_json(s)),
        other => panic!("no parser for corpus directory {other}"),
    }
}

const TARGETS: [&str; 9] = [
    "parse_braid",
    "parse_free",
    "parse_gn",
    "parse_g0",
    "parse_nf",
    "parse_pure_factors",
    "parse_factorization",
    "parse_presentation",
    "parse_presentation_json",
];

#[test]
fn corpus_seeds_parse_without_panicking() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus");
    let mut seen = 0;
    for target in TARGETS {
        let dir = root.join(target);
        for entry in std::fs::read_dir(&dir).unwrap_or_else(|e| panic!("{}: {e}", dir.display())) {
            let bytes = std::fs::read(entry.unwrap().path()).unwrap();
            if let Ok(s) = std::str::from_utf8(&bytes) {
                feed(target, s);
                seen += 1;
            }
        }
    }
    assert!(seen >= TARGETS.len());
}

#[test]
fn seeds_that_should_parse_do() {
    assert!(parse_braid("t4 t3^-1 x8", 9).is_ok());
    assert!(parse_nf("perm=[2,1,3,4,5,6,7,8,9] coords=v^1 s1^0 u1^1", 9).is_ok());
    assert!(parse_presentation("# comment\ngens: 3\n\nrel: g1 g2^-1\nrel: g3\n").is_ok());
}

proptest! {
    #[test]
    fn arbitrary_text(s in "\\PC{0,40}") {
        for t in TARGETS {
            feed(t, &s);
        }
    }

    #[test]
    fn token_soup(s in "([xtgzuvs][0-9]{1,2}(\\^-?[0-9])?(_[0-9])? ?){0,8}") {
        for t in TARGETS {
            feed(t, &s);
        }
    }
}
