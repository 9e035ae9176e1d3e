use std::path::Path;

use semiheaps_core::{lambda_corr, omega, Endomap, SwitchMonoid};

use crate::format::AlgebraFile;
use crate::{input_failure, report_algebra_error, Direction, Failure, EXIT_HOLDS, EXIT_VIOLATION};

pub(crate) fn run(
    direction: Direction,
    file: &Path,
    pair: Option<(usize, usize)>,
    switch: Option<Vec<usize>>,
    out: Option<&Path>,
    round_trip: bool,
) -> Result<u8, Failure> {
    match direction {
        Direction::ToMonoid => {
            if switch.is_some() {
                return Err(input_failure("--switch applies to to-semiheap"));
            }
            to_monoid(file, pair, out, round_trip)
        }
        Direction::ToSemiheap => {
            if pair.is_some() {
                return Err(input_failure("--pair applies to to-monoid"));
            }
            to_semiheap(file, switch, out, round_trip)
        }
    }
}

fn to_monoid(
    file: &Path,
    pair: Option<(usize, usize)>,
    out: Option<&Path>,
    round_trip: bool,
) -> Result<u8, Failure> {
    let alg = AlgebraFile::load(file)?;
    let t = alg.ternary()?;
    let (a, b) = pair.ok_or_else(|| input_failure("to-monoid needs --pair A B"))?;

    println!("command: correspond");
    println!("direction: to-monoid");
    println!("file: {}", file.display());
    println!("n: {}", alg.n);
    println!("pair: {a} {b}");

    let monoid = match omega(&t, (a, b)) {
        Ok(m) => m,
        Err(e) => return report_algebra_error(e),
    };
    println!("identity: {}", monoid.identity());
    println!(
        "switch: {}",
        crate::join(monoid.switch().image().iter().copied())
    );

    if let Some(path) = out {
        let mut image = AlgebraFile::from_binary(monoid.monoid());
        image.name = alg.name.as_ref().map(|name| format!("{name}-monoid"));
        image
            .metadata
            .insert("identity".to_string(), monoid.identity().to_string());
        image
            .metadata
            .insert("pair".to_string(), format!("{a} {b}"));
        image.metadata.insert(
            "switch".to_string(),
            crate::join(monoid.switch().image().iter().copied()),
        );
        image.save(path)?;
        println!("out: {}", path.display());
    }

    if round_trip {
        let (back, back_pair) = lambda_corr(&monoid).expect("a validated switch monoid maps back");
        if back == t && back_pair == (a, b) {
            println!("round-trip: identical");
        } else {
            println!("round-trip: differs");
            return Ok(EXIT_VIOLATION);
        }
    }
    Ok(EXIT_HOLDS)
}

fn to_semiheap(
    file: &Path,
    switch: Option<Vec<usize>>,
    out: Option<&Path>,
    round_trip: bool,
) -> Result<u8, Failure> {
    let alg = AlgebraFile::load(file)?;
    let table = alg.binary()?;
    let images = match switch {
        Some(images) => images,
        None => alg
            .metadata
            .get("switch")
            .ok_or_else(|| input_failure("to-semiheap needs --switch or a meta.switch entry"))?
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| {
                    input_failure(format!("meta.switch entry `{tok}` is not an integer"))
                })
            })
            .collect::<Result<Vec<usize>, Failure>>()?,
    };
    let phi = Endomap::new(alg.n, images).map_err(|e| input_failure(e.to_string()))?;

    println!("command: correspond");
    println!("direction: to-semiheap");
    println!("file: {}", file.display());
    println!("n: {}", alg.n);
    println!("switch: {}", crate::join(phi.image().iter().copied()));

    let monoid = match SwitchMonoid::new(table, phi) {
        Ok(m) => m,
        Err(e) => return report_algebra_error(e),
    };
    let (t, pair) = match lambda_corr(&monoid) {
        Ok(image) => image,
        Err(e) => return report_algebra_error(e),
    };
    println!("pair: {} {}", pair.0, pair.1);

    if let Some(path) = out {
        let mut image = AlgebraFile::from_ternary(&t);
        image.name = alg.name.as_ref().map(|name| format!("{name}-semiheap"));
        image
            .metadata
            .insert("pair".to_string(), format!("{} {}", pair.0, pair.1));
        image.save(path)?;
        println!("out: {}", path.display());
    }

    if round_trip {
        let back = omega(&t, pair).expect("the image pair is full by construction");
        if back == monoid {
            println!("round-trip: identical");
        } else {
            println!("round-trip: differs");
            return Ok(EXIT_VIOLATION);
        }
    }
    Ok(EXIT_HOLDS)
}
