//! JSON artifact envelope and per-kind payload schemas shared by the
//! emitting commands and the verifier. The envelope pins the graph shape
//! and the solver knobs so a verifier can rebuild identical context.

use coarse_decomp::decomposition::{
    BuildLedger, DecompositionReport, PipelineResult, TreeDecomposition,
};
use coarse_decomp::error::Result;
use coarse_decomp::family::{LayeredFamilyJson, WitnessingReport};
use coarse_decomp::graph::{Graph, Vertex};
use coarse_decomp::lp::ab::AbLpSolution;
use coarse_decomp::lp::{Arithmetic, LpConfig, Mode};
use coarse_decomp::menger::{MengerPipelineResult, MengerResult};
use coarse_decomp::rounding::{AbSeparatorCertificate, BalancedSeparatorCertificate};
use coarse_decomp::sampling::{PathPacking, SampledSubgraph};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Serialize, Deserialize)]
pub struct Artifact {
    pub kind: String,
    pub command: String,
    pub n: usize,
    pub m: usize,
    pub mode: Mode,
    pub seed: u64,
    pub tol: f64,
    pub path_cap: usize,
    pub payload: Value,
}

impl Artifact {
    pub fn lp_config(&self) -> LpConfig {
        LpConfig {
            mode: self.mode,
            arithmetic: Arithmetic::Float,
            cert_tol: self.tol,
            path_cap: self.path_cap,
            ..LpConfig::default()
        }
    }

    pub fn to_pretty(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

pub fn envelope(
    kind: &str,
    command: &str,
    g: &Graph,
    cfg: &LpConfig,
    seed: u64,
    payload: impl Serialize,
) -> Result<Artifact> {
    Ok(Artifact {
        kind: kind.into(),
        command: command.into(),
        n: g.n(),
        m: g.m(),
        mode: cfg.mode,
        seed,
        tol: cfg.cert_tol,
        path_cap: cfg.path_cap,
        payload: serde_json::to_value(payload)?,
    })
}

#[derive(Serialize, Deserialize)]
pub struct PartitionPayload {
    pub partition: coarse_decomp::partition::RadiusPartition,
    pub part_count: usize,
}

#[derive(Serialize, Deserialize)]
pub struct FamilyPayload {
    pub degeneracy: usize,
    pub layering: Vec<Vec<Vertex>>,
    pub family: LayeredFamilyJson,
    pub witnessing: WitnessingReport,
}

#[derive(Serialize, Deserialize)]
pub struct AbLpPayload {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub layering: Vec<Vec<Vertex>>,
    pub solution: AbLpSolution,
    pub dual_objective: f64,
    pub duality_ok: bool,
}

#[derive(Serialize, Deserialize)]
pub struct AbSeparatorPayload {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub layering: Vec<Vec<Vertex>>,
    pub lp_objective: f64,
    pub certificate: AbSeparatorCertificate,
}

#[derive(Serialize, Deserialize)]
pub struct BalancedLpPayload {
    pub xs: Vec<Vertex>,
    pub layering: Vec<Vec<Vertex>>,
    pub mode: Mode,
    pub objective: f64,
    pub weights: Vec<f64>,
    pub dual_objective: Option<f64>,
}

#[derive(Serialize, Deserialize)]
pub struct BalancedSeparatorPayload {
    pub xs: Vec<Vertex>,
    pub layering: Vec<Vec<Vertex>>,
    pub lp_objective: f64,
    pub certificate: BalancedSeparatorCertificate,
}

#[derive(Serialize, Deserialize)]
pub struct PathPackingPayload {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub layering: Vec<Vec<Vertex>>,
    pub packing: PathPacking,
}

#[derive(Serialize, Deserialize)]
pub struct SampledSubgraphPayload {
    pub xs: Vec<Vertex>,
    pub layering: Vec<Vec<Vertex>>,
    pub sample: SampledSubgraph,
}

#[derive(Serialize, Deserialize)]
pub struct TreeDecompPayload {
    pub x: Vec<Vertex>,
    pub layering: Vec<Vec<Vertex>>,
    pub decomposition: TreeDecomposition,
    pub ledger: BuildLedger,
    pub report: DecompositionReport,
}

#[derive(Serialize, Deserialize)]
pub struct TwPipelinePayload {
    pub t: usize,
    pub result: PipelineResult,
}

#[derive(Serialize, Deserialize)]
pub struct MengerPayload {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub result: MengerResult,
}

#[derive(Serialize, Deserialize)]
pub struct MengerPipelinePayload {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub t: usize,
    pub k: usize,
    pub result: MengerPipelineResult,
}
