//! Witnesses whose top `beta` middle coefficients are positive and the rest
//! negative, for every `(beta, d)` with `d <= 10`.

use ehrhart_patterns::search::construct_tail_pattern;
use ehrhart_patterns::Error;

fn main() {
    for d in 4..=10 {
        for beta in 1..=d - 2 {
            match construct_tail_pattern(beta, d) {
                Ok(w) => println!("({beta}, {d:>2}) {:<10} {:?} {}", w.pattern.to_full_desc(), w.params, w.construction),
                Err(Error::Unsupported(why)) => println!("({beta}, {d:>2}) unsupported: {why}"),
                Err(e) => println!("({beta}, {d:>2}) error: {e}"),
            }
        }
    }
}
