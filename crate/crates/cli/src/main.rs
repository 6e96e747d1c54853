//! Command-line frontend: every computation of `mgsc-core` behind one
//! subcommand each, with deterministic text and JSON output.
//!
//! Exit codes: 0 on success, 2 on invalid input, 1 on an internal
//! invariant failure (a library assertion tripping).

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use mgsc_core::classical::cuspidal_pairs_char2;
use mgsc_core::glspringer::{full_correspondence, locate, IrrTupleGL};
use mgsc_core::partitions::Partition;
use mgsc_core::rootdata::{
    is_regular_pair_cuspidal, is_regular_pair_principal, parabolic_order, subdiagram_components,
    sylow_minimal_levis,
};
use mgsc_core::tables::{cuspidal_count_exceptional, g2_correspondence};
use mgsc_core::{CartanType, FactoredOrder, Prime, Series};

#[derive(Parser)]
#[command(
    name = "mgsc",
    version,
    about = "Exact modular generalized Springer correspondence data"
)]
struct Cli {
    /// Output format; the MGSC_FORMAT environment variable sets the default.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "MGSC_FORMAT",
        default_value_t = OutputFormat::Text
    )]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Weyl group order of a Cartan type, in factored form.
    Weyl {
        /// Cartan type, e.g. A4, B3, E8.
        cartan_type: String,
    },
    /// Minimal Levi subsets whose Weyl group contains an ell-Sylow of W.
    Sylow {
        /// Cartan type, e.g. G2, A5.
        cartan_type: String,
        /// Characteristic (a prime).
        #[arg(long)]
        ell: u64,
    },
    /// The full GL(n) correspondence table.
    Gl {
        n: u64,
        /// Characteristic (a prime).
        #[arg(long)]
        ell: u64,
    },
    /// Invert the GL(n) correspondence at one orbit partition.
    #[command(name = "gl-locate")]
    GlLocate {
        /// Orbit partition, e.g. 4,2,1.
        lambda: String,
        /// Characteristic (a prime).
        #[arg(long)]
        ell: u64,
    },
    /// Cuspidal pairs of a classical type (B/C/D) at ell = 2.
    Classical {
        /// Cartan type, e.g. B2, C3, D4.
        cartan_type: String,
        /// Must be 2; the classification is specific to that prime.
        #[arg(long, default_value_t = 2)]
        ell: u64,
    },
    /// Cuspidal-pair count for an exceptional type (plus the G2 series
    /// assignments).
    Exceptional {
        /// One of E6, E7, E8, F4, G2.
        cartan_type: String,
        /// Characteristic (a prime).
        #[arg(long)]
        ell: u64,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&cli)));
    let code = match outcome {
        Ok(Ok(output)) => {
            print!("{output}");
            0
        }
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            2
        }
        Err(_) => {
            eprintln!("error: internal invariant failure");
            1
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<String> {
    let format = cli.format;
    match &cli.command {
        Command::Weyl { cartan_type } => cmd_weyl(cartan_type, format),
        Command::Sylow { cartan_type, ell } => cmd_sylow(cartan_type, *ell, format),
        Command::Gl { n, ell } => cmd_gl(*n, *ell, format),
        Command::GlLocate { lambda, ell } => cmd_gl_locate(lambda, *ell, format),
        Command::Classical { cartan_type, ell } => cmd_classical(cartan_type, *ell, format),
        Command::Exceptional { cartan_type, ell } => cmd_exceptional(cartan_type, *ell, format),
    }
}

fn cmd_weyl(type_str: &str, format: OutputFormat) -> Result<String> {
    let t: CartanType = type_str.parse()?;
    let order = t.weyl_order();
    match format {
        OutputFormat::Text => Ok(format!(
            "type: {t}\nweyl order: {}\n",
            order_text(&order)
        )),
        OutputFormat::Json => Ok(json_output(
            json!({"command": "weyl", "type": t.to_string()}),
            json!({"order": order_json(&order)}),
        )),
    }
}

fn cmd_sylow(type_str: &str, ell: u64, format: OutputFormat) -> Result<String> {
    let t: CartanType = type_str.parse()?;
    let ell = Prime::new(ell)?;
    let order = t.weyl_order();
    let cuspidal = is_regular_pair_cuspidal(t, ell);
    let principal = is_regular_pair_principal(t, ell);
    let diagram = t.diagram();

    struct LeviRow {
        nodes: Vec<u8>,
        components: Vec<String>,
        order: FactoredOrder,
        index: FactoredOrder,
    }
    let levis: Vec<LeviRow> = sylow_minimal_levis(t, ell)
        .into_iter()
        .map(|j| {
            let sub_order = parabolic_order(t, &j).expect("enumerated subsets are valid");
            let index = order
                .checked_div(&sub_order)
                .expect("parabolic order divides the group order");
            LeviRow {
                nodes: j.nodes().to_vec(),
                components: subdiagram_components(&diagram, &j)
                    .expect("enumerated subsets are valid")
                    .iter()
                    .map(CartanType::to_string)
                    .collect(),
                order: sub_order,
                index,
            }
        })
        .collect();

    match format {
        OutputFormat::Text => {
            let mut out = format!(
                "type: {t}\nell: {ell}\nweyl order: {}\nregular pair cuspidal: {cuspidal}\nregular pair principal: {principal}\nminimal levi subsets ({}):\n",
                order_text(&order),
                levis.len()
            );
            for row in &levis {
                let nodes = render_nodes(&row.nodes);
                let components = if row.components.is_empty() {
                    "-".to_string()
                } else {
                    row.components.join("+")
                };
                out.push_str(&format!(
                    "  {nodes}  components: {components}  order: {}  index: {}\n",
                    order_text(&row.order),
                    order_text(&row.index)
                ));
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let levis: Vec<Value> = levis
                .iter()
                .map(|row| {
                    json!({
                        "nodes": row.nodes,
                        "components": row.components,
                        "order": order_json(&row.order),
                        "index": order_json(&row.index),
                    })
                })
                .collect();
            Ok(json_output(
                json!({"command": "sylow", "type": t.to_string(), "ell": ell.get()}),
                json!({
                    "weyl_order": order_json(&order),
                    "cuspidal": cuspidal,
                    "principal": principal,
                    "minimal_levis": levis,
                }),
            ))
        }
    }
}

fn cmd_gl(n: u64, ell: u64, format: OutputFormat) -> Result<String> {
    let ell = Prime::new(ell)?;
    if n == 0 {
        bail!("n must be at least 1");
    }
    let rows = full_correspondence(n, ell);
    match format {
        OutputFormat::Text => {
            let mut out = format!(
                "GL({n}) correspondence, ell = {ell}: {} rows\n",
                rows.len()
            );
            let cells: Vec<[String; 3]> = rows
                .iter()
                .map(|r| {
                    [
                        r.datum.nu().to_string(),
                        labels_text(&r.tuple),
                        r.pair.lambda().to_string(),
                    ]
                })
                .collect();
            out.push_str(&render_table(["nu", "labels", "lambda"], &cells));
            Ok(out)
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "nu": r.datum.nu().to_string(),
                        "labels": label_strings(&r.tuple),
                        "lambda": r.pair.lambda().to_string(),
                    })
                })
                .collect();
            Ok(json_output(
                json!({"command": "gl", "n": n, "ell": ell.get()}),
                json!({"rows": rows}),
            ))
        }
    }
}

fn cmd_gl_locate(lambda_str: &str, ell: u64, format: OutputFormat) -> Result<String> {
    let lambda: Partition = lambda_str.parse()?;
    let ell = Prime::new(ell)?;
    let (datum, tuple) = locate(&lambda, ell)?;
    let levi = levi_text(datum.nu());
    let series = series_kind(datum.nu());
    match format {
        OutputFormat::Text => Ok(format!(
            "lambda: {lambda}\nell: {ell}\nnu: {}\nlabels: {}\nlevi: {levi}\nseries: {series}\n",
            datum.nu(),
            labels_text(&tuple)
        )),
        OutputFormat::Json => Ok(json_output(
            json!({"command": "gl-locate", "lambda": lambda.to_string(), "ell": ell.get()}),
            json!({
                "nu": datum.nu().to_string(),
                "labels": label_strings(&tuple),
                "levi": levi,
                "series": series,
            }),
        )),
    }
}

fn cmd_classical(type_str: &str, ell: u64, format: OutputFormat) -> Result<String> {
    let t: CartanType = type_str.parse()?;
    if ell != 2 {
        bail!(
            "the distinguished-orbit cuspidal classification for classical types \
             is specific to ell = 2 (got ell = {ell})"
        );
    }
    let pairs = cuspidal_pairs_char2(t)?;
    match format {
        OutputFormat::Text => {
            let mut out = format!("type: {t}\nell: 2\ncuspidal pairs ({}):\n", pairs.len());
            for o in &pairs {
                out.push_str(&format!("  {o}\n"));
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let pairs: Vec<String> = pairs.iter().map(|o| o.parts().to_string()).collect();
            Ok(json_output(
                json!({"command": "classical", "type": t.to_string(), "ell": 2}),
                json!({"pairs": pairs}),
            ))
        }
    }
}

fn cmd_exceptional(type_str: &str, ell: u64, format: OutputFormat) -> Result<String> {
    let t: CartanType = type_str.parse()?;
    let ell = Prime::new(ell)?;
    let count = cuspidal_count_exceptional(t, ell)?;
    let assignments = (t.series() == Series::G).then(|| g2_correspondence(ell));
    match format {
        OutputFormat::Text => {
            let mut out = format!("type: {t}\nell: {ell}\ncuspidal pairs: {count}\n");
            if let Some(rows) = &assignments {
                out.push_str(&format!("series assignments ({}):\n", rows.len()));
                let cells: Vec<[String; 3]> = rows
                    .iter()
                    .map(|r| {
                        [
                            r.pair.orbit.to_string(),
                            r.pair.local_system.to_string(),
                            r.series.to_string(),
                        ]
                    })
                    .collect();
                let widths = column_widths(&cells);
                for row in &cells {
                    out.push_str(&format!(
                        "  {:w0$}  {:w1$}  {}\n",
                        row[0],
                        row[1],
                        row[2],
                        w0 = widths[0],
                        w1 = widths[1]
                    ));
                }
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let mut result = Map::new();
            result.insert("cuspidal_pairs".to_string(), json!(count));
            if let Some(rows) = &assignments {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "orbit": r.pair.orbit.to_string(),
                            "local_system": r.pair.local_system.to_string(),
                            "series": r.series.to_string(),
                        })
                    })
                    .collect();
                result.insert("assignments".to_string(), json!(rows));
            }
            Ok(json_output(
                json!({"command": "exceptional", "type": t.to_string(), "ell": ell.get()}),
                Value::Object(result),
            ))
        }
    }
}

// ===========================================================================
// Rendering helpers
// ===========================================================================

fn json_output(query: Value, result: Value) -> String {
    let doc = json!({"query": query, "result": result});
    let mut text = serde_json::to_string_pretty(&doc).expect("JSON serialization");
    text.push('\n');
    text
}

fn order_json(order: &FactoredOrder) -> Value {
    let factors: Map<String, Value> = order
        .factors()
        .map(|(p, e)| (p.to_string(), json!(e)))
        .collect();
    json!({"value": order.to_decimal(), "factors": factors})
}

/// `720 = 2^4 * 3^2 * 5`, or just the decimal when the factored form is
/// no more informative (1 and single primes).
fn order_text(order: &FactoredOrder) -> String {
    let decimal = order.to_decimal();
    let factored = order.to_string();
    if decimal == factored {
        decimal
    } else {
        format!("{decimal} = {factored}")
    }
}

fn render_nodes(nodes: &[u8]) -> String {
    let inner: Vec<String> = nodes.iter().map(u8::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn label_strings(tuple: &IrrTupleGL) -> Vec<String> {
    tuple.labels().iter().map(Partition::to_string).collect()
}

/// Tuple layout for text mode: partition strings joined by `;` inside
/// brackets, e.g. `[0; 1]`.
fn labels_text(tuple: &IrrTupleGL) -> String {
    format!("[{}]", label_strings(tuple).join("; "))
}

fn levi_text(nu: &Partition) -> String {
    let blocks: Vec<String> = nu.parts().iter().map(|p| format!("GL({p})")).collect();
    blocks.join(" x ")
}

fn series_kind(nu: &Partition) -> &'static str {
    if nu.len() == 1 {
        "cuspidal"
    } else if nu.parts().iter().all(|&p| p == 1) {
        "principal"
    } else {
        "induced"
    }
}

fn column_widths(rows: &[[String; 3]]) -> [usize; 3] {
    let mut widths = [0usize; 3];
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    widths
}

fn render_table(headers: [&str; 3], rows: &[[String; 3]]) -> String {
    let mut widths = column_widths(rows);
    for (w, h) in widths.iter_mut().zip(headers) {
        *w = (*w).max(h.len());
    }
    let mut out = format!(
        "{:w0$}  {:w1$}  {}\n",
        headers[0],
        headers[1],
        headers[2],
        w0 = widths[0],
        w1 = widths[1]
    );
    for row in rows {
        out.push_str(&format!(
            "{:w0$}  {:w1$}  {}\n",
            row[0],
            row[1],
            row[2],
            w0 = widths[0],
            w1 = widths[1]
        ));
    }
    out
}
