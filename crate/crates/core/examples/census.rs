use effalg_core::enumerate::{enumerate_eas, enumerate_geas, Mode};
use std::time::Instant;

fn main() {
    for n in 1..=6 {
        let t = Instant::now();
        let labeled = enumerate_geas(n, Mode::Labeled).unwrap().len();
        let iso = enumerate_geas(n, Mode::UpToIsomorphism).unwrap().len();
        let eas = enumerate_eas(n, Mode::Labeled).unwrap().len();
        let eas_iso = enumerate_eas(n, Mode::UpToIsomorphism).unwrap().len();
        println!(
            "n={n} geas={labeled} iso={iso} eas={eas} eas_iso={eas_iso} {:?}",
            t.elapsed()
        );
    }
}
