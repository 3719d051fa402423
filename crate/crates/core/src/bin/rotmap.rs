//! Command-line surface for the map algebra.
//!
//! Exit codes: 0 on success, 1 on a negative verdict (`iso` with no witness,
//! `verify` with a failed check), 2 on malformed input.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rotmap::classes::{
    self, census_with_bound, class_count, class_size, enumerate_selfconjugate,
};
use rotmap::graph::{self, euler_characteristic, genus};
use rotmap::iso::{are_isomorphic, same_class_criterion};
use rotmap::knot::{decompose, knot_of};
use rotmap::map::{normal_matching, CombMap, MapText};
use rotmap::perm::Perm;
use rotmap::{random_map, Error};

#[derive(Parser)]
#[command(name = "rotmap", version, about = "Combinatorial maps as permutation pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// One map given inline or as a JSON file `{ "n": 2m, "p": "...", "pi": "..." }`.
#[derive(Args, Clone)]
struct MapInput {
    /// Vertex permutation in cycle notation
    #[arg(long)]
    p: Option<String>,
    /// Next-edge matching in cycle notation (default: normal matching)
    #[arg(long)]
    pi: Option<String>,
    /// Number of edges m (sets the order 2m when --pi is absent)
    #[arg(long)]
    m: Option<usize>,
    /// Read the map from a JSON file instead
    #[arg(long)]
    file: Option<String>,
}

impl MapInput {
    fn load(&self) -> Result<CombMap, String> {
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            let mt: MapText =
                serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
            return CombMap::from_text(&mt).map_err(|e| e.to_string());
        }
        let pi = match (&self.pi, self.m) {
            (Some(text), m) => {
                let n = match m {
                    Some(m) => 2 * m,
                    None => infer_order(text)?,
                };
                Perm::parse_cycles(text, n).map_err(|e| e.to_string())?
            }
            (None, Some(m)) => normal_matching(m).map_err(|e| e.to_string())?,
            (None, None) => {
                let p = self.p.as_deref().unwrap_or("");
                let n = infer_order(p)?;
                if n == 0 || n % 2 != 0 {
                    return Err("cannot infer m; pass --m or --pi".into());
                }
                normal_matching(n / 2).map_err(|e| e.to_string())?
            }
        };
        let p = Perm::parse_cycles(self.p.as_deref().unwrap_or(""), pi.order())
            .map_err(|e| e.to_string())?;
        CombMap::new(p, pi).map_err(|e| e.to_string())
    }
}

/// Smallest even order covering every corner mentioned in cycle notation.
fn infer_order(text: &str) -> Result<usize, String> {
    let mut max = 0usize;
    let mut digits = String::new();
    for ch in text.chars().chain(std::iter::once(' ')) {
        if ch.is_ascii_digit() {
            digits.push(ch);
        } else if !digits.is_empty() {
            let v: usize = digits.parse().map_err(|e| format!("{e}"))?;
            max = max.max(v);
            digits.clear();
        }
    }
    Ok(max + max % 2)
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two maps over a shared n-matching
    Mul {
        #[command(flatten)]
        input: MapInput,
        /// Vertex permutation of the right factor
        #[arg(long)]
        q: String,
    },
    /// Dual map (Q, P)
    Dual {
        #[command(flatten)]
        input: MapInput,
    },
    /// Reversed map (P^{-1}, π)
    Reverse {
        #[command(flatten)]
        input: MapInput,
    },
    /// e-matching ϱ = P·π·P^{-1}
    Ematching {
        #[command(flatten)]
        input: MapInput,
    },
    /// Edges and next edges of a map
    Edges {
        #[command(flatten)]
        input: MapInput,
    },
    /// Canonical knot μ and its well coloring
    Knot {
        #[command(flatten)]
        input: MapInput,
    },
    /// Factor a map as knot × selfconjugate
    Decompose {
        #[command(flatten)]
        input: MapInput,
    },
    /// Test selfconjugacy, or list K_π with --list
    Selfconj {
        #[command(flatten)]
        input: MapInput,
        /// List all m!·2^m members of K_π instead
        #[arg(long)]
        list: bool,
    },
    /// Group all (2m)! maps by e-matching
    Census {
        #[arg(long)]
        m: usize,
        /// Output style: text (default) or lines (`<rho> <TAB> <count>`)
        #[arg(long, default_value = "text")]
        format: String,
        /// Raise the enumeration bound from 4 to 5 (slow)
        #[arg(long)]
        force: bool,
    },
    /// Class count (2m−1)!! and class size m!·2^m
    Counts {
        #[arg(long)]
        m: usize,
    },
    /// Search for an isomorphism witness between two maps
    Iso {
        #[command(flatten)]
        input: MapInput,
        /// Vertex permutation of the second map
        #[arg(long)]
        q: String,
        /// n-matching of the second map (default: same as the first)
        #[arg(long)]
        pi2: Option<String>,
    },
    /// Vertices, faces, edges, components, Euler characteristic
    View {
        #[command(flatten)]
        input: MapInput,
        /// Also export the graph: edge-list or dot
        #[arg(long)]
        format: Option<String>,
    },
    /// Run the theorem-verification suite at order 2m
    Verify {
        #[arg(long)]
        m: usize,
        /// Seed for the randomized spot checks
        #[arg(long, default_value_t = 17)]
        seed: u64,
        /// Raise the enumeration bound from 4 to 5 (slow)
        #[arg(long)]
        force: bool,
    },
}

fn print_map(map: &CombMap) {
    println!(
        "{}",
        serde_json::to_string(&map.to_text()).expect("serializable")
    );
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Mul { input, q } => {
            let s = input.load()?;
            let q = Perm::parse_cycles(&q, s.order()).map_err(|e| e.to_string())?;
            let t = CombMap::new(q, s.n_matching().clone()).map_err(|e| e.to_string())?;
            print_map(&s.multiply(&t).map_err(|e| e.to_string())?);
            Ok(0)
        }
        Command::Dual { input } => {
            print_map(&input.load()?.dual());
            Ok(0)
        }
        Command::Reverse { input } => {
            print_map(&input.load()?.reverse());
            Ok(0)
        }
        Command::Ematching { input } => {
            println!("{}", input.load()?.e_matching());
            Ok(0)
        }
        Command::Edges { input } => {
            let map = input.load()?;
            let fmt = |pairs: Vec<rotmap::EdgePair>| {
                pairs
                    .iter()
                    .map(|e| format!("{{{},{}}}", e.0, e.1))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("edges: {}", fmt(map.edges()));
            println!("next-edges: {}", fmt(map.next_edges()));
            Ok(0)
        }
        Command::Knot { input } => {
            let map = input.load()?;
            let knot = knot_of(&map);
            println!("mu={}", knot.mu);
            print!("corner:");
            for c in 1..=map.order() {
                print!(" {c}");
            }
            println!();
            print!("color: ");
            for c in 1..=map.order() {
                print!(" {}", if knot.coloring.is_c1(c) { "C1" } else { "C2" });
            }
            println!();
            Ok(0)
        }
        Command::Decompose { input } => {
            let map = input.load()?;
            let (knot, a) = decompose(&map);
            println!("mu={}", knot.mu);
            println!("selfconjugate={}", a.vertex_permutation());
            Ok(0)
        }
        Command::Selfconj { input, list } => {
            if list {
                let map = input.load()?;
                for member in enumerate_selfconjugate(map.n_matching()) {
                    println!("{}", member.vertex_permutation());
                }
                Ok(0)
            } else {
                let map = input.load()?;
                let yes = classes::is_selfconjugate(&map);
                println!("{}", if yes { "selfconjugate" } else { "not selfconjugate" });
                Ok(if yes { 0 } else { 1 })
            }
        }
        Command::Census { m, format, force } => {
            let bound = if force { 5 } else { 4 };
            if force && m == 5 {
                eprintln!("warning: m=5 enumerates 10! = 3628800 maps; this takes a while");
            }
            let rows = census_with_bound(m, bound).map_err(|e| e.to_string())?;
            match format.as_str() {
                "lines" => {
                    for (rho, count) in &rows {
                        println!("{rho}\t{count}");
                    }
                }
                "text" => {
                    println!("census m={m}: {} classes", rows.len());
                    for (rho, count) in &rows {
                        println!("  {rho}: {count} maps");
                    }
                }
                other => return Err(format!("unknown format '{other}'")),
            }
            Ok(0)
        }
        Command::Counts { m } => {
            println!(
                "classes={} size={} total={}",
                class_count(m),
                class_size(m),
                class_count(m) * class_size(m)
            );
            Ok(0)
        }
        Command::Iso { input, q, pi2 } => {
            let m1 = input.load()?;
            let pi2 = match pi2 {
                Some(text) => {
                    Perm::parse_cycles(&text, m1.order()).map_err(|e| e.to_string())?
                }
                None => m1.n_matching().clone(),
            };
            let q = Perm::parse_cycles(&q, pi2.order()).map_err(|e| e.to_string())?;
            let m2 = CombMap::new(q, pi2).map_err(|e| e.to_string())?;
            match are_isomorphic(&m1, &m2).map_err(|e| e.to_string())? {
                Some(a) => {
                    let same = same_class_criterion(&m1, &m2, &a)
                        .map_err(|e| e.to_string())?;
                    println!("witness={a}");
                    println!("same-class={same}");
                    Ok(0)
                }
                None => {
                    println!("not isomorphic");
                    Ok(1)
                }
            }
        }
        Command::View { input, format } => {
            let map = input.load()?;
            let gv = graph::view(&map);
            println!("vertices={}", cycles_str(&gv.vertices));
            println!("faces={}", cycles_str(&gv.faces));
            println!(
                "edges={}",
                gv.edge_pairs
                    .iter()
                    .map(|e| format!("{{{},{}}}", e.0, e.1))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("components={}", gv.components.len());
            println!("chi={:?} genus={:?}", euler_characteristic(&map), genus(&map));
            if let Some(fmt) = format {
                print!("{}", graph::export_graph(&map, &fmt).map_err(|e| e.to_string())?);
            }
            Ok(0)
        }
        Command::Verify { m, seed, force } => {
            let bound = if force { 5 } else { 4 };
            if m > bound {
                return Err(Error::BoundExceeded(m, bound).to_string());
            }
            Ok(verify(m, seed))
        }
    }
}

fn cycles_str(cycles: &[Vec<usize>]) -> String {
    cycles
        .iter()
        .map(|c| {
            format!(
                "({})",
                c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
            )
        })
        .collect()
}

/// Full theorem suite at one order; returns the process exit code.
fn verify(m: usize, seed: u64) -> u8 {
    let mut failed = false;
    let mut check = |name: &str, ok: bool, detail: String| {
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        failed |= !ok;
    };
    let pi = normal_matching(m).expect("m >= 1");

    // census counts: (2m−1)!! classes of m!·2^m, multiplying to (2m)!
    let rows = census_with_bound(m, 5).expect("bounded above");
    let sizes_ok = rows.iter().all(|&(_, c)| c as u128 == class_size(m));
    check(
        "census",
        rows.len() as u128 == class_count(m) && sizes_ok,
        format!(
            "{} classes of {} maps, expected {} of {}",
            rows.len(),
            rows.first().map(|r| r.1).unwrap_or(0),
            class_count(m),
            class_size(m)
        ),
    );

    // K_π group axioms and size
    let members = enumerate_selfconjugate(&pi);
    let mut axioms = members.len() as u128 == class_size(m);
    axioms &= members.iter().any(|mm| mm.vertex_permutation().is_identity());
    for s in &members {
        axioms &= classes::is_selfconjugate(&s.reverse());
        for t in &members {
            axioms &= classes::is_selfconjugate(&s.multiply(t).expect("shared pi"));
        }
    }
    check(
        "selfconjugate-group",
        axioms,
        format!("|K_pi| = {} = {}", members.len(), class_size(m)),
    );

    // knot and decomposition over every map
    let mut knots_ok = true;
    let mut decomp_ok = true;
    let mut total = 0u64;
    for p in classes::all_perms(2 * m) {
        let map = CombMap::new(p, pi.clone()).expect("valid map");
        let knot = knot_of(&map);
        knots_ok &= knot.is_valid();
        knots_ok &= knot.mu.cycles().iter().all(|c| c.len() % 2 == 0);
        let (k, a) = decompose(&map);
        let mu_map = CombMap::new(k.mu.clone(), pi.clone()).expect("valid map");
        decomp_ok &= classes::is_selfconjugate(&a)
            && mu_map.multiply(&a).expect("shared pi") == map;
        total += 1;
    }
    check("knot", knots_ok, format!("pi^mu = rho over all {total} maps"));
    check(
        "decomposition",
        decomp_ok,
        format!("P = mu * A with A in K_pi over all {total} maps"),
    );

    // product law spot check: ϱ_{S·T} = ϱ_T^{S^{-1}}
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut law_ok = true;
    for _ in 0..1000 {
        let s = random_map(m.max(2), &mut rng);
        let t = random_map(m.max(2), &mut rng);
        law_ok &= classes::rho_of_product(&s, &t).expect("shared pi")
            == s.multiply(&t).expect("shared pi").e_matching();
    }
    check("product-law", law_ok, "rho(S*T) = rho(T)^(S^-1), 1000 random pairs".into());

    // coset identity P·K_σ = K_{σ^{P^{-1}}} for random P, all σ
    let mut coset_ok = true;
    let p = random_map(m, &mut rng);
    for sigma in classes::all_matchings(2 * m) {
        let target = classes::coset_map(&p, &sigma).expect("matching");
        let k_sigma: Vec<CombMap> = classes::all_perms(2 * m)
            .map(|q| CombMap::new(q, pi.clone()).expect("valid map"))
            .filter(|mm| mm.e_matching() == sigma)
            .collect();
        let mut landed: Vec<Perm> = k_sigma
            .iter()
            .map(|q| p.multiply(q).expect("shared pi"))
            .inspect(|mm| coset_ok &= mm.e_matching() == target)
            .map(|mm| mm.vertex_permutation().clone())
            .collect();
        landed.sort();
        landed.dedup();
        coset_ok &= landed.len() as u128 == class_size(m);
    }
    check(
        "coset-law",
        coset_ok,
        format!("P*K_sigma = K_(sigma^(P^-1)) over all {} matchings", class_count(m)),
    );

    if failed {
        1
    } else {
        0
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
