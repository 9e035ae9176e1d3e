use std::path::Path;

use semiheaps_constructions::{
    boolean_matrix_monoid, boolean_matrix_transpose, constant_semigroup, cubic_matrix_semiheap,
    cyclic_group, cyclic_sum_diheap, group_heap, klein_group, odd_residue_value, odd_residues,
    relation_semiheap, symmetric_group_3, CubicScalars,
};
use semiheaps_core::{
    check_semiheap_sampled, BinaryTable, Bracket, TernaryTable, DEFAULT_WITNESS_LIMIT,
};

use crate::format::AlgebraFile;
use crate::{input_failure, Failure, EXIT_HOLDS, EXIT_VIOLATION};

pub(crate) fn run(
    spec: &[String],
    out: Option<&Path>,
    check_biunit: bool,
    seed: u64,
) -> Result<u8, Failure> {
    let (head, args) = spec
        .split_first()
        .ok_or_else(|| input_failure("make needs a construction name"))?;
    println!("command: make");
    println!("construction: {}", spec.join(" "));

    if head == "cubic" {
        return cubic(args, out, check_biunit, seed);
    }
    if check_biunit {
        return Err(input_failure(
            "--check-biunit applies to the cubic construction",
        ));
    }

    let file = match head.as_str() {
        "cyclic-sum" => {
            let n = single_size(args, "make cyclic-sum N")?;
            let table = cyclic_sum_diheap(n).map_err(|e| input_failure(e.to_string()))?;
            named(AlgebraFile::from_ternary(&table), format!("cyclic-sum-{n}"))
        }
        "odd-residues" => {
            let m = single_size(args, "make odd-residues M")?;
            let table = odd_residues(m).map_err(|e| input_failure(e.to_string()))?;
            let mut file = named(
                AlgebraFile::from_ternary(&table),
                format!("odd-residues-{m}"),
            );
            let values = (0..m).map(odd_residue_value);
            file.metadata
                .insert("labels".to_string(), crate::join(values));
            file
        }
        "group-heap" => {
            let (group, token) =
                group_by_token(single_token(args, "make group-heap {zN|klein|s3}")?)?;
            let table = group_heap(&group).map_err(|e| input_failure(e.to_string()))?;
            named(
                AlgebraFile::from_ternary(&table),
                format!("group-heap-{token}"),
            )
        }
        "group" => {
            let (group, token) = group_by_token(single_token(args, "make group {zN|klein|s3}")?)?;
            named(AlgebraFile::from_binary(&group), format!("group-{token}"))
        }
        "constant" => {
            let [n, c] = sizes::<2>(args, "make constant N C")?;
            let table = constant_semigroup(n, c).map_err(|e| input_failure(e.to_string()))?;
            named(
                AlgebraFile::from_binary(&table),
                format!("constant-{n}-{c}"),
            )
        }
        "boolean-monoid" => {
            let k = single_size(args, "make boolean-monoid K")?;
            let table = boolean_matrix_monoid(k).map_err(|e| input_failure(e.to_string()))?;
            let transpose = boolean_matrix_transpose(k).expect("same bound as the monoid");
            let mut file = named(
                AlgebraFile::from_binary(&table),
                format!("boolean-monoid-{k}"),
            );
            file.metadata.insert(
                "switch".to_string(),
                crate::join(transpose.image().iter().copied()),
            );
            file
        }
        "relation" => {
            let [a, b] = sizes::<2>(args, "make relation A B")?;
            let table = relation_semiheap(a, b).map_err(|e| input_failure(e.to_string()))?;
            named(
                AlgebraFile::from_ternary(&table),
                format!("relation-{a}-{b}"),
            )
        }
        other => {
            return Err(input_failure(format!(
                "unknown construction `{other}`; known: boolean-monoid, constant, cubic, \
                 cyclic-sum, group, group-heap, odd-residues, relation"
            )))
        }
    };

    println!("kind: {}", file.kind.word());
    println!("n: {}", file.n);
    if let Some(path) = out {
        file.save(path)?;
        println!("out: {}", path.display());
    }
    Ok(EXIT_HOLDS)
}

fn cubic(
    args: &[String],
    out: Option<&Path>,
    check_biunit: bool,
    seed: u64,
) -> Result<u8, Failure> {
    let usage = "make cubic SIDE {z2|bool}";
    if args.len() != 2 {
        return Err(input_failure(format!("usage: {usage}")));
    }
    let side = parse_size(&args[0], usage)?;
    let scalars = match args[1].as_str() {
        "z2" => CubicScalars::Mod2,
        "bool" => CubicScalars::Boolean,
        other => {
            return Err(input_failure(format!(
                "unknown scalars `{other}`; use z2 or bool"
            )))
        }
    };
    if !(1..=2).contains(&side) {
        return Err(input_failure("cubic supports sides 1 and 2"));
    }
    let lazy = cubic_matrix_semiheap(side, scalars).map_err(|e| input_failure(e.to_string()))?;
    println!("kind: ternar");
    println!("elements: {}", lazy.size());

    let mut code = EXIT_HOLDS;
    if check_biunit {
        let i = lazy.element("I").expect("cubic tables distinguish I");
        let iota = lazy.element("iota").expect("cubic tables distinguish iota");
        println!("element I: {i}");
        println!("element iota: {iota}");
        let size = lazy.size();
        let first = (0..size).filter(|&a| lazy.bracket(a, i, iota) == a).count() as u64;
        let second = (0..size).filter(|&a| lazy.bracket(a, iota, i) == a).count() as u64;
        println!("right-pair-check I iota: {first}/{size}");
        println!("right-pair-check iota I: {second}/{size}");
        let sampled = check_semiheap_sampled(&lazy, 10_000, seed, DEFAULT_WITNESS_LIMIT);
        println!(
            "sampled-law: {}",
            if sampled.report.holds() {
                "holds"
            } else {
                "fails"
            }
        );
        println!("samples: {}", sampled.samples);
        println!("seed: {}", sampled.seed);
        for v in sampled.report.violations() {
            println!(
                "violation: {} {}",
                v.law,
                crate::join(v.witness.iter().copied())
            );
        }
        if first == size && second == size && sampled.report.holds() {
            println!("verdict: holds");
        } else {
            println!("verdict: fails");
            code = EXIT_VIOLATION;
        }
    }

    if let Some(path) = out {
        if side != 1 {
            return Err(input_failure(
                "a side-2 cubic table has 256 elements and 16777216 entries; \
                 file output supports side 1",
            ));
        }
        let dense = TernaryTable::from_fn(lazy.size() as usize, |a, b, c| {
            lazy.bracket(a as u64, b as u64, c as u64) as usize
        })
        .expect("side-1 cubic brackets stay in range");
        let mut file = named(
            AlgebraFile::from_ternary(&dense),
            format!("cubic-1-{}", args[1]),
        );
        for (name, value) in lazy.distinguished() {
            file.metadata.insert(name.clone(), value.to_string());
        }
        file.save(path)?;
        println!("out: {}", path.display());
    }
    Ok(code)
}

fn named(mut file: AlgebraFile, name: String) -> AlgebraFile {
    file.name = Some(name);
    file
}

fn group_by_token(token: &str) -> Result<(BinaryTable, String), Failure> {
    match token {
        "klein" => Ok((klein_group(), "klein".to_string())),
        "s3" => Ok((symmetric_group_3(), "s3".to_string())),
        t if t.starts_with('z') && t.len() > 1 => {
            let n: usize = t[1..]
                .parse()
                .map_err(|_| input_failure(format!("unknown group `{t}`; use zN, klein, or s3")))?;
            let group = cyclic_group(n).map_err(|e| input_failure(e.to_string()))?;
            Ok((group, format!("z{n}")))
        }
        other => Err(input_failure(format!(
            "unknown group `{other}`; use zN, klein, or s3"
        ))),
    }
}

fn single_token<'a>(args: &'a [String], usage: &str) -> Result<&'a str, Failure> {
    match args {
        [token] => Ok(token),
        _ => Err(input_failure(format!("usage: {usage}"))),
    }
}

fn single_size(args: &[String], usage: &str) -> Result<usize, Failure> {
    Ok(sizes::<1>(args, usage)?[0])
}

fn sizes<const K: usize>(args: &[String], usage: &str) -> Result<[usize; K], Failure> {
    if args.len() != K {
        return Err(input_failure(format!("usage: {usage}")));
    }
    let mut parsed = [0usize; K];
    for (slot, arg) in parsed.iter_mut().zip(args) {
        *slot = parse_size(arg, usage)?;
    }
    Ok(parsed)
}

fn parse_size(arg: &str, usage: &str) -> Result<usize, Failure> {
    arg.parse()
        .map_err(|_| input_failure(format!("`{arg}` is not a number; usage: {usage}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_tokens_cover_cyclic_klein_and_symmetric() {
        assert_eq!(group_by_token("z5").unwrap().0.n(), 5);
        assert_eq!(group_by_token("klein").unwrap().0.n(), 4);
        assert_eq!(group_by_token("s3").unwrap().0.n(), 6);
        assert!(group_by_token("z").is_err());
        assert!(group_by_token("z0").is_err());
        assert!(group_by_token("dihedral").is_err());
    }
}
