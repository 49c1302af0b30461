use anyhow::{bail, Context, Result};
use std::path::Path;
use std::time::Instant;

use c5eh::ehpair::{self, PairOrWitness};
use c5eh::outsimplicial::{self, SplitBranch, SplitCase, SplitCertificate};
use c5eh::structures::{self, StructureMode, StructureSpec};
use c5eh::{gen, oracle, patterns, Error};

use crate::documents::{self, Document};
use crate::formats;
use crate::{CheckKind, Command, ExperimentArgs, GenKind, ModeArg, PairAction, StructureAction};

pub fn run(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Gen { kind } => gen_cmd(kind),
        Command::Check { what } => check_cmd(what),
        Command::Structure { action } => structure_cmd(action),
        Command::Pair { action } => pair_cmd(action),
        Command::Split { input, out } => split_cmd(&input, out.as_deref()),
        Command::Experiment(args) => experiment_cmd(args),
    }
}

fn write_text(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).with_context(|| format!("writing {}", path.display()))
}

fn gen_cmd(kind: GenKind) -> Result<i32> {
    match kind {
        GenKind::Random { n, seed, out } => {
            let t = gen::random_tournament(n, seed);
            write_text(&out, &formats::tournament_to_string(&t))?;
            println!("{}  {}", formats::tournament_digest(&t), out.display());
        }
        GenKind::C5free { n, seed, out } => {
            let t = gen::gen_c5free(n, seed);
            write_text(&out, &formats::tournament_to_string(&t))?;
            println!("{}  {}", formats::tournament_digest(&t), out.display());
        }
        GenKind::Planted {
            n,
            k,
            c,
            noise,
            seed,
            out,
            structure_out,
        } => {
            let (t, s) = gen::gen_planted_blocks(n, k, c, noise, seed)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            write_text(&out, &formats::tournament_to_string(&t))?;
            let digest = formats::tournament_digest(&t);
            println!("{digest}  {}", out.display());
            if let Some(spath) = structure_out {
                documents::structure_document(&s, &digest).write(&spath)?;
                println!("structure: {}", spath.display());
            }
        }
        GenKind::Outsimp {
            n,
            seed,
            blowup,
            out,
        } => {
            let d = gen::gen_outsimplicial(n, seed, blowup);
            write_text(&out, &formats::digraph_to_string(&d))?;
            println!("{}  {}", formats::digraph_digest(&d), out.display());
        }
    }
    Ok(0)
}

fn check_cmd(what: CheckKind) -> Result<i32> {
    let CheckKind::C5 { input, oracle: use_oracle, out } = what;
    let t = formats::read_tournament(&input)?;
    let witness = if use_oracle {
        oracle::brute_c5(&t).map_err(|e| anyhow::anyhow!("{e}"))?
    } else {
        patterns::find_c5(&t)
    };
    match witness {
        None => {
            println!("c5-free");
            Ok(0)
        }
        Some(w) => {
            println!(
                "c5 witness: ({}, {}, {}, {}, {})",
                w.vertices[0], w.vertices[1], w.vertices[2], w.vertices[3], w.vertices[4]
            );
            if let Some(path) = out {
                documents::witness_document(&w, &formats::tournament_digest(&t)).write(&path)?;
            }
            Ok(10)
        }
    }
}

fn structure_cmd(action: StructureAction) -> Result<i32> {
    match action {
        StructureAction::Find {
            input,
            c,
            lambda,
            w,
            seed,
            attempts,
            out,
        } => {
            let t = formats::read_tournament(&input)?;
            let w = documents::parse_w(&w).map_err(anyhow::Error::msg)?;
            let spec = StructureSpec::new(c, lambda, w).map_err(|e| anyhow::anyhow!("{e}"))?;
            match structures::find_structure(&t, &spec, attempts, seed)
                .map_err(|e| anyhow::anyhow!("{e}"))?
            {
                None => {
                    eprintln!("no structure found after {attempts} attempts");
                    Ok(11)
                }
                Some(s) => {
                    let sizes: Vec<usize> = s.sets().iter().map(|x| x.len()).collect();
                    println!("structure found: sizes {sizes:?}");
                    if let Some(path) = out {
                        documents::structure_document(&s, &formats::tournament_digest(&t))
                            .write(&path)?;
                    }
                    Ok(0)
                }
            }
        }
        StructureAction::Verify {
            input,
            structure,
            mode,
            out,
        } => {
            let t = formats::read_tournament(&input)?;
            let doc = Document::read(&structure)?;
            let digest = formats::tournament_digest(&t);
            if doc.input_digest() != digest {
                println!("fail: structure document is bound to a different input");
                return Ok(13);
            }
            let s = documents::structure_from_document(&doc)?;
            let mode = match mode {
                ModeArg::Plain => StructureMode::Plain,
                ModeArg::Smooth => StructureMode::Smooth,
            };
            let report =
                structures::verify_structure(&t, &s, mode, None).map_err(|e| anyhow::anyhow!("{e}"))?;
            println!("{report}");
            if let Some(path) = out {
                documents::report_document(report.passed(), report.to_string(), &digest)
                    .write(&path)?;
            }
            Ok(if report.passed() { 0 } else { 13 })
        }
    }
}

fn pair_cmd(action: PairAction) -> Result<i32> {
    match action {
        PairAction::Find {
            input,
            structure,
            out,
        } => {
            let t = formats::read_tournament(&input)?;
            let doc = Document::read(&structure)?;
            let digest = formats::tournament_digest(&t);
            if doc.input_digest() != digest {
                eprintln!("structure document is bound to a different input");
                return Ok(12);
            }
            let s = documents::structure_from_document(&doc)?;
            let outcome = match ehpair::find_complete_pair(&t, &s) {
                Ok(outcome) => outcome,
                Err(Error::StructureRejected(msg)) => {
                    eprintln!("structure failed verification: {msg}");
                    return Ok(12);
                }
                Err(e) => return Err(anyhow::anyhow!("{e}")),
            };
            match &outcome {
                PairOrWitness::Pair(p) => println!(
                    "complete_pair branch={} sizeA={} sizeB={}",
                    p.branch.tag(),
                    p.a.len(),
                    p.b.len()
                ),
                PairOrWitness::Witness(w) => println!(
                    "c5 witness: ({}, {}, {}, {}, {})",
                    w.vertices[0], w.vertices[1], w.vertices[2], w.vertices[3], w.vertices[4]
                ),
            }
            if let Some(path) = out {
                documents::pair_or_witness_document(&outcome, &digest).write(&path)?;
            }
            Ok(0)
        }
        PairAction::Verify { input, certificate } => {
            let doc = Document::read(&certificate)?;
            let (pass, detail) = verify_document(&input, &doc)?;
            if pass {
                println!("pass");
                Ok(0)
            } else {
                println!("fail: {detail}");
                Ok(13)
            }
        }
    }
}

/// Re-checks any certificate document against its input file.
fn verify_document(input: &Path, doc: &Document) -> Result<(bool, String)> {
    match doc {
        Document::CompletePair { a, b, .. } => {
            let t = formats::read_tournament(input)?;
            if doc.input_digest() != formats::tournament_digest(&t) {
                return Ok((false, "digest mismatch".into()));
            }
            if oracle::verify_complete_pair(&t, a, b) {
                Ok((true, String::new()))
            } else {
                Ok((false, "pair is not complete".into()))
            }
        }
        Document::C5Witness { .. } => {
            let t = formats::read_tournament(input)?;
            if doc.input_digest() != formats::tournament_digest(&t) {
                return Ok((false, "digest mismatch".into()));
            }
            let PairOrWitness::Witness(w) = documents::pair_or_witness_from_document(doc)? else {
                unreachable!("document type checked above");
            };
            if oracle::verify_c5_witness(&t, &w) {
                Ok((true, String::new()))
            } else {
                Ok((false, "tuple does not induce a C5".into()))
            }
        }
        Document::Split {
            case,
            clique_components,
            bag_index,
            bag,
            a,
            b,
            ..
        } => {
            let d = formats::read_digraph(input)?;
            if doc.input_digest() != formats::digraph_digest(&d) {
                return Ok((false, "digest mismatch".into()));
            }
            let case = match case.as_str() {
                "I" => SplitCase::Separated,
                "II" => SplitCase::Reachable,
                other => bail!("unknown split case {other:?}"),
            };
            let branch = match (clique_components, bag_index, bag) {
                (Some(components), _, _) => SplitBranch::BigClique {
                    components: components.clone(),
                },
                (_, Some(idx), Some(bag)) => SplitBranch::Centroid {
                    bag_index: *idx,
                    bag: bag.clone(),
                },
                _ => SplitBranch::BigClique { components: vec![] },
            };
            let cert = SplitCertificate {
                case,
                a: a.clone(),
                b: b.clone(),
                branch,
            };
            if outsimplicial::verify_split(&d, &cert) {
                Ok((true, String::new()))
            } else {
                Ok((false, "split certificate does not hold".into()))
            }
        }
        Document::Structure { .. } => {
            let t = formats::read_tournament(input)?;
            if doc.input_digest() != formats::tournament_digest(&t) {
                return Ok((false, "digest mismatch".into()));
            }
            let s = documents::structure_from_document(doc)?;
            let report = structures::verify_structure(&t, &s, StructureMode::Smooth, None)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            Ok((report.passed(), report.to_string()))
        }
        Document::Report { .. } => bail!("report documents carry no verifiable certificate"),
    }
}

fn split_cmd(input: &Path, out: Option<&Path>) -> Result<i32> {
    let d = formats::read_digraph(input)?;
    let cert = match outsimplicial::split(&d) {
        Ok(cert) => cert,
        Err(Error::NotOutsimplicial { v, a, b }) => {
            eprintln!("not outsimplicial: out-neighbors {a} and {b} of vertex {v} are not adjacent");
            return Ok(14);
        }
        Err(e) => return Err(anyhow::anyhow!("{e}")),
    };
    debug_assert!(outsimplicial::verify_split(&d, &cert));
    let case = match cert.case {
        SplitCase::Separated => "I",
        SplitCase::Reachable => "II",
    };
    println!("case={} sizeA={} sizeB={}", case, cert.a.len(), cert.b.len());
    if let Some(path) = out {
        documents::split_document(&cert, &formats::digraph_digest(&d)).write(path)?;
    }
    Ok(0)
}

struct Row {
    kind: &'static str,
    n: usize,
    seed: u64,
    c: String,
    lambda: String,
    outcome: String,
    size_a: usize,
    size_b: usize,
    tr_lower_bound: usize,
    runtime_ms: u128,
}

fn experiment_cmd(args: ExperimentArgs) -> Result<i32> {
    if args.kind != "eh-stats" {
        bail!("unknown experiment kind {:?} (available: eh-stats)", args.kind);
    }
    if args.n_list.is_empty() {
        bail!("--n-list must name at least one size");
    }
    if args.k != 5 {
        bail!("the pipeline works on five sets; use --k 5");
    }
    // Validate planted feasibility upfront.
    for &n in &args.n_list {
        let s = ((*args.c.numer() as usize) * n).div_ceil(*args.c.denom() as usize);
        if s == 0 || args.k * s > n {
            bail!("planted blocks infeasible at n={n}: k·ceil(c·n) = {}·{s}", args.k);
        }
    }

    let mut cells: Vec<(&'static str, usize, u64)> = Vec::new();
    for kind in ["c5free", "planted"] {
        for &n in &args.n_list {
            for seed in 0..args.seeds {
                cells.push((kind, n, seed));
            }
        }
    }

    let run_cell = |&(kind, n, seed): &(&'static str, usize, u64)| -> Row {
        let start = Instant::now();
        let (outcome, size_a, size_b, tr_lb) = match kind {
            "planted" => match gen::gen_planted_blocks(n, args.k, args.c, args.noise, seed) {
                Ok((t, s)) => {
                    let tr = patterns::max_transitive_greedy(&t).len();
                    match ehpair::find_complete_pair(&t, &s) {
                        Ok(PairOrWitness::Pair(p)) => {
                            ("complete_pair".into(), p.a.len(), p.b.len(), tr)
                        }
                        Ok(PairOrWitness::Witness(_)) => ("c5_witness".into(), 5, 5, tr),
                        Err(e) => (format!("error: {e}"), 0, 0, tr),
                    }
                }
                Err(e) => (format!("error: {e}"), 0, 0, 0),
            },
            "c5free" => {
                let t = gen::gen_c5free(n, seed);
                let tr = patterns::max_transitive_greedy(&t).len();
                let spec = StructureSpec::new(args.c, args.lambda, vec![false; 5])
                    .expect("validated above");
                match structures::find_structure(&t, &spec, 4, seed) {
                    Ok(Some(s)) => match ehpair::find_complete_pair(&t, &s) {
                        Ok(PairOrWitness::Pair(p)) => {
                            ("complete_pair".into(), p.a.len(), p.b.len(), tr)
                        }
                        Ok(PairOrWitness::Witness(_)) => ("c5_witness".into(), 5, 5, tr),
                        Err(e) => (format!("error: {e}"), 0, 0, tr),
                    },
                    Ok(None) => ("no_structure".into(), 0, 0, tr),
                    Err(e) => (format!("error: {e}"), 0, 0, tr),
                }
            }
            _ => unreachable!(),
        };
        Row {
            kind,
            n,
            seed,
            c: args.c.to_string(),
            lambda: args.lambda.to_string(),
            outcome,
            size_a,
            size_b,
            tr_lower_bound: tr_lb,
            runtime_ms: if args.timing {
                start.elapsed().as_millis()
            } else {
                0
            },
        }
    };

    #[cfg(feature = "parallel")]
    let mut rows: Vec<Row> = {
        use rayon::prelude::*;
        cells.par_iter().map(run_cell).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut rows: Vec<Row> = cells.iter().map(run_cell).collect();

    rows.sort_by(|a, b| (a.kind, a.n, a.seed).cmp(&(b.kind, b.n, b.seed)));

    let mut csv = String::from("kind,n,seed,c,lambda,outcome,sizeA,sizeB,tr_lower_bound,runtime_ms\n");
    for r in &rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.kind,
            r.n,
            r.seed,
            r.c,
            r.lambda,
            r.outcome,
            r.size_a,
            r.size_b,
            r.tr_lower_bound,
            r.runtime_ms
        ));
    }
    write_text(&args.out, &csv)?;
    println!("wrote {} rows to {}", rows.len(), args.out.display());
    Ok(0)
}
