//! Graph sources shared by the verbs: graph6 strings, graph6 files, stdin
//! and family flags.

use std::io::{self, BufRead, BufReader, IsTerminal, Read};
use std::fs::File;
use std::path::PathBuf;

use clap::Args;
use qdist_core::{graph6_decode, make_family, FamilyKind, FamilySpec, Graph};

use crate::CliError;

#[derive(Debug, Clone, Default, Args)]
pub struct FamilyArgs {
    /// Family name: path, cycle, complete, complete-bipartite,
    /// complete-minus-edge, gndt, gndra, k-copies
    #[arg(long = "kind", visible_alias = "family", value_name = "KIND")]
    pub kind: Option<FamilyKind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Attachment index for gndra (defaults to --t)
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    /// Number of copies for k-copies
    #[arg(long)]
    pub k: Option<usize>,
    /// Base family for k-copies; its parameters come from the other flags
    #[arg(long, value_name = "KIND")]
    pub base: Option<FamilyKind>,
}

fn need(value: Option<usize>, kind: FamilyKind, flag: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("family {kind} needs --{flag}")))
}

impl FamilyArgs {
    pub fn spec(&self) -> Result<Option<FamilySpec>, CliError> {
        self.kind.map(|kind| self.spec_for(kind)).transpose()
    }

    fn spec_for(&self, kind: FamilyKind) -> Result<FamilySpec, CliError> {
        let n = || need(self.n, kind, "n");
        Ok(match kind {
            FamilyKind::Path => FamilySpec::Path { n: n()? },
            FamilyKind::Cycle => FamilySpec::Cycle { n: n()? },
            FamilyKind::Complete => FamilySpec::Complete { n: n()? },
            FamilyKind::CompleteMinusEdge => FamilySpec::CompleteMinusEdge { n: n()? },
            FamilyKind::CompleteBipartite => FamilySpec::CompleteBipartite {
                a: need(self.a, kind, "a")?,
                b: need(self.b, kind, "b")?,
            },
            FamilyKind::Gndt => FamilySpec::Gndt { n: n()?, d: need(self.d, kind, "d")?, t: need(self.t, kind, "t")? },
            FamilyKind::Gndra => FamilySpec::Gndra {
                n: n()?,
                d: need(self.d, kind, "d")?,
                r: need(self.r.or(self.t), kind, "r")?,
                a: need(self.a, kind, "a")?,
            },
            FamilyKind::KCopies => {
                let base = self
                    .base
                    .ok_or_else(|| CliError::Usage("family k-copies needs --base".into()))?;
                if base == FamilyKind::KCopies {
                    return Err(CliError::Usage("--base cannot itself be k-copies".into()));
                }
                FamilySpec::KCopies { base: Box::new(self.spec_for(base)?), k: need(self.k, kind, "k")? }
            }
        })
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct GraphInput {
    /// Graph in graph6 format; repeatable
    #[arg(long = "graph6", value_name = "G6")]
    pub graph6: Vec<String>,
    /// File with one graph6 string per line; `-` reads stdin
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

/// One input graph with the label it is reported under.
pub struct Labeled {
    pub graph: Graph,
    pub family: Option<FamilySpec>,
}

fn decode_lines(reader: impl Read, source: &str) -> Result<Vec<Labeled>, CliError> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line.map_err(|e| CliError::Input(format!("{source}: {e}")))?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let graph = graph6_decode(text).map_err(|e| CliError::Input(format!("{source} line {}: {e}", i + 1)))?;
        out.push(Labeled { graph, family: None });
    }
    Ok(out)
}

impl GraphInput {
    pub fn is_empty(&self) -> bool {
        self.graph6.is_empty() && self.file.is_none() && self.family.kind.is_none()
    }

    /// Collects every graph named on the command line. With no source
    /// given and `stdin_fallback`, reads graph6 lines from stdin unless it
    /// is a terminal.
    pub fn load(&self, stdin_fallback: bool) -> Result<Vec<Labeled>, CliError> {
        let mut out = Vec::new();
        for text in &self.graph6 {
            let graph = graph6_decode(text).map_err(|e| CliError::Input(format!("--graph6 {text}: {e}")))?;
            out.push(Labeled { graph, family: None });
        }
        match self.file.as_deref() {
            Some(p) if p.as_os_str() == "-" => out.extend(decode_lines(io::stdin().lock(), "stdin")?),
            Some(p) => {
                let f = File::open(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
                out.extend(decode_lines(f, &p.display().to_string())?);
            }
            None => {}
        }
        if let Some(spec) = self.family.spec()? {
            let graph = make_family(&spec).map_err(|e| CliError::Input(e.to_string()))?;
            out.push(Labeled { graph, family: Some(spec) });
        }
        if self.is_empty() && stdin_fallback {
            let stdin = io::stdin();
            if stdin.is_terminal() {
                return Err(CliError::Usage(
                    "no graph given: use --graph6, --file, --kind or pipe graph6 lines".into(),
                ));
            }
            out.extend(decode_lines(stdin.lock(), "stdin")?);
        }
        Ok(out)
    }
}
