use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context};
use lapmotif::exact::{adjacency_kernel, verify_eigenpair_exact};
use lapmotif::generators::{chain, complete, cycle, petal};
use lapmotif::io::{graph_to_json, parse_rational, serialize_graph};
use lapmotif::operations::{
    attach_chain2, connect_pairs_with_function, count_subgraph_embeddings, double_edge,
    double_motif, double_motif_general, double_vertex, doubled_graph_kernel_basis,
    join_eigenfunctions, join_graphs, localized_eigenfunction_for_doubling,
    merge_pairs_with_function, split_graph, IdMapping, Side, SplitParts,
};
use lapmotif::spectral::{full_spectrum, DEFAULT_GROUPING_TOLERANCE};
use lapmotif::synthesis::{
    basic_block, embed_with_eigenfunction, join_blocks, negate_block, realize_pair, rotate_block,
    Block, BlockKind,
};
use lapmotif::{Error, Graph, Motif, VertexFunction};
use num_traits::One;
use serde_json::json;

use crate::files::{
    function_path, read_block, read_function, read_graph, write_atomic, write_block,
    write_function, write_graph, InputError,
};
use crate::{BlockKindArg, Cli, Command, EdgeModeArg, GenKind, OpCommand, OpIo, SynthCommand};

pub fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<InputError>() || cause.is::<std::io::Error>() {
            return 2;
        }
        if let Some(Error::Parse { .. }) = cause.downcast_ref::<Error>() {
            return 2;
        }
    }
    1
}

fn rational_arg(s: &str) -> anyhow::Result<num_rational::BigRational> {
    parse_rational(s)
        .with_context(|| format!("bad rational {s:?}"))
        .map_err(|e| InputError(e).into())
}

fn grouping_tolerance(flag: Option<f64>) -> anyhow::Result<f64> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("LAPMOTIF_TOL") {
        Ok(s) => s
            .trim()
            .parse()
            .with_context(|| format!("LAPMOTIF_TOL={s:?} is not a number"))
            .map_err(|e| InputError(e).into()),
        Err(_) => Ok(DEFAULT_GROUPING_TOLERANCE),
    }
}

fn values_json(f: &VertexFunction) -> Vec<String> {
    f.values().iter().map(|x| x.to_string()).collect()
}

fn basis_text(basis: &[VertexFunction]) -> String {
    basis
        .iter()
        .map(|f| values_json(f).join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("json values serialize")
    );
}

pub fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let json = cli.json;
    match &cli.command {
        Command::Gen { kind, param, o } => {
            let g = match kind {
                GenKind::Chain => chain(*param),
                GenKind::Cycle => cycle(*param),
                GenKind::Complete => complete(*param),
                GenKind::Petal => petal(*param),
            }?;
            match o {
                Some(path) => {
                    write_graph(path, &g)?;
                    if json {
                        print_json(&json!({"n": g.vertex_count(), "m": g.edge_count()}));
                    }
                }
                None if json => println!("{}", graph_to_json(&g)),
                None => println!("{}", serialize_graph(&g)),
            }
        }
        Command::Spectrum {
            i,
            tol,
            eigenvectors,
        } => {
            let g = read_graph(i)?;
            let s = full_spectrum(&g, grouping_tolerance(*tol)?)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&s.to_json(*eigenvectors))?
                );
            } else {
                println!("{:>20}  multiplicity", "eigenvalue");
                for (l, m) in s.eigenvalues().iter().zip(s.multiplicities()) {
                    println!("{l:>20.12}  {m}");
                }
                if *eigenvectors {
                    for (l, u) in s.all_values().iter().zip(s.eigenfunctions()) {
                        let row: Vec<String> = u.iter().map(|x| format!("{x:.12}")).collect();
                        println!("{l:.12}: {}", row.join(" "));
                    }
                }
            }
        }
        Command::M1 { i, basis } => {
            let g = read_graph(i)?;
            let kernel = adjacency_kernel(&g);
            if let Some(path) = basis {
                write_atomic(path, &basis_text(&kernel.basis))?;
            }
            if json {
                let vectors: Vec<Vec<String>> = kernel.basis.iter().map(values_json).collect();
                print_json(&json!({"m1": kernel.multiplicity(), "basis": vectors}));
            } else {
                println!("{}", kernel.multiplicity());
            }
        }
        Command::Verify { i, f, lambda } => {
            let g = read_graph(i)?;
            let f = read_function(f, g.vertex_count())?;
            let lambda = rational_arg(lambda)?;
            let ok = verify_eigenpair_exact(&g, &f, &lambda)?;
            if json {
                print_json(&json!({"eigenpair": ok, "lambda": lambda.to_string()}));
            } else {
                println!("{}", if ok { "pass" } else { "fail" });
            }
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Op(op) => run_op(op, json)?,
        Command::Synth(s) => run_synth(s, json)?,
        Command::Count { i, pattern } => {
            let g = read_graph(i)?;
            let p = read_graph(pattern)?;
            let c = count_subgraph_embeddings(&g, &p)?;
            if json {
                print_json(&json!({
                    "non_induced": c.non_induced,
                    "induced": c.induced,
                    "automorphisms": c.automorphisms,
                }));
            } else {
                println!("non-induced   {}", c.non_induced);
                println!("induced       {}", c.induced);
                println!("automorphisms {}", c.automorphisms);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report(
    json: bool,
    io: &OpIo,
    graph: &Graph,
    mapping: &IdMapping,
    function: Option<&VertexFunction>,
) -> anyhow::Result<()> {
    write_graph(&io.o, graph)?;
    if let (Some(path), Some(f)) = (&io.emit_function, function) {
        write_function(path, f)?;
    }
    if json {
        let mut v = json!({
            "n": graph.vertex_count(),
            "m": graph.edge_count(),
            "mapping": mapping,
        });
        if let Some(f) = function {
            v["function"] = json!(values_json(f));
        }
        print_json(&v);
    } else {
        println!(
            "{}: {} vertices, {} edges",
            io.o.display(),
            graph.vertex_count(),
            graph.edge_count()
        );
        for a in &mapping.added {
            println!(
                "  new vertex {}: {}",
                a.id,
                serde_json::to_string(&a.origin)?
            );
        }
    }
    Ok(())
}

fn motif<'g>(g: &'g Graph, vertices: &[usize]) -> anyhow::Result<Motif<'g>> {
    Ok(Motif::new(g, vertices.to_vec())?)
}

fn run_op(op: &OpCommand, json: bool) -> anyhow::Result<()> {
    match op {
        OpCommand::DoubleVertex { io, vertex } => {
            let g = read_graph(&io.i)?;
            let c = double_vertex(&g, *vertex)?;
            report(json, io, &c.graph, &c.mapping, Some(&c.function))
        }
        OpCommand::DoubleMotif {
            io,
            vertices,
            f,
            lambda,
        } => {
            let g = read_graph(&io.i)?;
            let m = motif(&g, vertices)?;
            let lambda = rational_arg(lambda)?;
            match f {
                None => {
                    let t = double_motif(&m);
                    report(json, io, &t.graph, &t.mapping, None)
                }
                Some(path) => {
                    let f = read_function(path, m.len())?;
                    let c = if lambda.is_one() {
                        localized_eigenfunction_for_doubling(&m, &f)?
                    } else {
                        double_motif_general(&m, &f, &lambda)?
                    };
                    report(json, io, &c.graph, &c.mapping, Some(&c.function))
                }
            }
        }
        OpCommand::DoubleEdge { io, edge, mode } => {
            let g = read_graph(&io.i)?;
            let d = double_edge(&g, edge[0], edge[1])?;
            let (n1, n2) = d.degrees;
            let chosen = &d.modes[match mode {
                EdgeModeArg::Minus => 0,
                EdgeModeArg::Plus => 1,
            }];
            write_graph(&io.o, &d.graph)?;
            if let Some(path) = &io.emit_function {
                match &chosen.exact_function {
                    Some(f) => write_function(path, f)?,
                    None => {
                        let lines: Vec<String> = chosen
                            .function
                            .iter()
                            .enumerate()
                            .map(|(v, x)| format!("{v} {x:e}"))
                            .collect();
                        write_atomic(path, &lines.join("\n"))?;
                    }
                }
            }
            let modes: Vec<serde_json::Value> = d
                .modes
                .iter()
                .map(|m| {
                    json!({
                        "lambda": m.lambda,
                        "symbolic": m.symbolic(n1, n2),
                        "exact_lambda": m.exact_lambda.as_ref().map(|x| x.to_string()),
                        "residual": m.residual,
                    })
                })
                .collect();
            if json {
                print_json(&json!({
                    "n": d.graph.vertex_count(),
                    "m": d.graph.edge_count(),
                    "degrees": [n1, n2],
                    "mapping": d.mapping,
                    "modes": modes,
                }));
            } else {
                println!(
                    "{}: {} vertices, {} edges",
                    io.o.display(),
                    d.graph.vertex_count(),
                    d.graph.edge_count()
                );
                for m in &d.modes {
                    println!(
                        "  {} = {:.12}  residual {:.2e}",
                        m.symbolic(n1, n2),
                        m.lambda,
                        m.residual
                    );
                }
            }
            Ok(())
        }
        OpCommand::DoubleGraph { io } => {
            let g = read_graph(&io.i)?;
            let (t, basis) = doubled_graph_kernel_basis(&g)?;
            write_graph(&io.o, &t.graph)?;
            if let Some(path) = &io.emit_function {
                write_atomic(path, &basis_text(&basis))?;
            }
            if json {
                print_json(&json!({
                    "n": t.graph.vertex_count(),
                    "m": t.graph.edge_count(),
                    "mapping": t.mapping,
                    "kernel_functions": basis.len(),
                }));
            } else {
                println!(
                    "{}: {} vertices, {} edges, {} new kernel functions",
                    io.o.display(),
                    t.graph.vertex_count(),
                    t.graph.edge_count(),
                    basis.len()
                );
            }
            Ok(())
        }
        OpCommand::Split {
            io,
            f,
            shared,
            first,
            second,
            first_edges,
            second_edges,
        } => {
            let g = read_graph(&io.i)?;
            let f = read_function(f, g.vertex_count())?;
            let mut parts = SplitParts {
                shared: shared.clone(),
                first: first.clone(),
                second: second.clone(),
                ..Default::default()
            };
            for (edges, side) in [(first_edges, Side::First), (second_edges, Side::Second)] {
                for &(u, v) in edges {
                    if parts.edge_side.insert((u.min(v), u.max(v)), side).is_some() {
                        bail!(InputError(anyhow::anyhow!("edge {u},{v} assigned twice")));
                    }
                }
            }
            let c = split_graph(&g, &parts, &f)?;
            report(json, io, &c.graph, &c.mapping, Some(&c.function))
        }
        OpCommand::Join {
            io,
            at,
            with,
            with_at,
            f,
            with_function,
            lambda,
        } => {
            let g1 = read_graph(&io.i)?;
            let g2 = read_graph(with)?;
            match (f, with_function) {
                (Some(f1), Some(f2)) => {
                    let f1 = read_function(f1, g1.vertex_count())?;
                    let f2 = read_function(f2, g2.vertex_count())?;
                    let lambda = rational_arg(lambda)?;
                    let c = join_eigenfunctions(&g1, &f1, *at, &g2, &f2, *with_at, &lambda)?;
                    report(json, io, &c.graph, &c.mapping, Some(&c.function))
                }
                _ => {
                    let t = join_graphs(&g1, *at, &g2, *with_at)?;
                    report(json, io, &t.graph, &t.mapping, None)
                }
            }
        }
        OpCommand::AttachChain2 { io, f, vertex } => {
            let g = read_graph(&io.i)?;
            let f = read_function(f, g.vertex_count())?;
            let c = attach_chain2(&g, &f, *vertex)?;
            report(json, io, &c.graph, &c.mapping, Some(&c.function))
        }
        OpCommand::Merge { io, f, pairs } => {
            let g = read_graph(&io.i)?;
            let f = read_function(f, g.vertex_count())?;
            let c = merge_pairs_with_function(&g, pairs, &f)?;
            report(json, io, &c.graph, &c.mapping, Some(&c.function))
        }
        OpCommand::Connect { io, f, pairs } => {
            let g = read_graph(&io.i)?;
            let f = read_function(f, g.vertex_count())?;
            let c = connect_pairs_with_function(&g, pairs, &f)?;
            report(json, io, &c.graph, &c.mapping, Some(&c.function))
        }
    }
}

fn report_block(json: bool, path: &Path, b: &Block) -> anyhow::Result<()> {
    write_block(path, b)?;
    if json {
        let mut v = serde_json::to_value(b.meta())?;
        v["vertices"] = json!(b.graph.vertex_count());
        v["edges"] = json!(b.graph.edge_count());
        print_json(&v);
    } else {
        println!(
            "{}: pair ({}, {}) at p0 = {}, {} vertices, {} edges",
            path.display(),
            b.pair.0,
            b.pair.1,
            b.p0,
            b.graph.vertex_count(),
            b.graph.edge_count()
        );
    }
    Ok(())
}

fn run_synth(s: &SynthCommand, json: bool) -> anyhow::Result<()> {
    match s {
        SynthCommand::Block { kind, count, o } => {
            let kind = match kind {
                BlockKindArg::Triangle => BlockKind::Triangle,
                BlockKindArg::Pentagon => BlockKind::Pentagon,
            };
            report_block(json, o, &basic_block(kind, *count)?)
        }
        SynthCommand::Rotate { i, o } => report_block(json, o, &rotate_block(&read_block(i)?)?),
        SynthCommand::Negate { i, o } => report_block(json, o, &negate_block(&read_block(i)?)?),
        SynthCommand::Join { i, o } => {
            let blocks = i
                .iter()
                .map(|p| read_block(p))
                .collect::<anyhow::Result<Vec<_>>>()?;
            report_block(json, o, &join_blocks(&blocks)?)
        }
        SynthCommand::Realize { n, m, o } => report_block(json, o, &realize_pair(*n, *m)?),
        SynthCommand::Embed { i, f, o } => {
            let sigma = read_graph(i)?;
            let f = read_function(f, sigma.vertex_count())?;
            let e = embed_with_eigenfunction(&sigma, &f)?;
            write_graph(o, &e.graph)?;
            write_function(&function_path(o), &e.function)?;
            if json {
                print_json(&json!({
                    "n": e.graph.vertex_count(),
                    "m": e.graph.edge_count(),
                    "gadget": e.gadget,
                    "attachments": e.attachments,
                }));
            } else {
                println!(
                    "{}: {} vertices, {} edges, {} blocks attached{}",
                    o.display(),
                    e.graph.vertex_count(),
                    e.graph.edge_count(),
                    e.attachments.len(),
                    match e.gadget {
                        Some(w) => format!(", parity vertex {w}"),
                        None => String::new(),
                    }
                );
            }
            Ok(())
        }
    }
}
