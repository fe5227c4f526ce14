use hypercover::cert::Status;
use hypercover::suites::{reproduce, SuiteBounds, SUITES};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let only: Option<&str> = args.get(1).map(|s| s.as_str());
    for suite in SUITES {
        if let Some(o) = only {
            if o != *suite {
                continue;
            }
        }
        let t0 = Instant::now();
        match reproduce(suite, SuiteBounds::default()) {
            Ok(certs) => {
                let confirmed = certs.iter().filter(|c| c.status == Status::Confirmed).count();
                let disc = certs.iter().filter(|c| c.status == Status::Discrepancy).count();
                println!(
                    "{suite}: {} certs ({confirmed} confirmed, {disc} discrepancy) in {:?}",
                    certs.len(),
                    t0.elapsed()
                );
                for c in certs.iter().filter(|c| c.status == Status::Discrepancy).take(3) {
                    if *suite != "pdc-discrepancy" {
                        println!("  DISC {} {}", c.instance, serde_json::to_string(&c.checks).unwrap());
                    }
                }
            }
            Err(e) => println!("{suite}: ERROR {e}"),
        }
    }
}
