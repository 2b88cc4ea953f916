use super::{LinalgError, Rational, RationalMatrix};
use crate::graph::Graph;

/// Ordered vertex partition `V₁ ∪ … ∪ V_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    order: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Blocks must be nonempty, pairwise disjoint and cover `0..order`.
    pub fn new(order: usize, blocks: Vec<Vec<usize>>) -> Result<Self, LinalgError> {
        let mut seen = vec![false; order];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(LinalgError::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= order {
                    return Err(LinalgError::InvalidPartition(format!(
                        "vertex {v} out of range for order {order}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(LinalgError::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(LinalgError::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(Partition { order, blocks })
    }

    pub fn discrete(order: usize) -> Self {
        Partition {
            order,
            blocks: (0..order).map(|v| vec![v]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Parses `"0,1|2,3,4"`.
    pub fn parse(order: usize, text: &str) -> Result<Self, LinalgError> {
        let blocks = text
            .split('|')
            .map(|block| {
                block
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<usize>()
                            .map_err(|_| LinalgError::InvalidPartition(format!("bad vertex `{s}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(order, blocks)
    }
}

/// Row sums of `Q(G)` from vertex `u` into each block.
fn block_row_sums(g: &Graph, p: &Partition, u: usize, block_of: &[usize]) -> Vec<i64> {
    let mut sums = vec![0i64; p.blocks.len()];
    for v in g.neighbors(u) {
        sums[block_of[v]] += 1;
    }
    sums[block_of[u]] += g.degree(u) as i64;
    sums
}

fn block_index(p: &Partition) -> Vec<usize> {
    let mut block_of = vec![0; p.order];
    for (b, block) in p.blocks.iter().enumerate() {
        for &v in block {
            block_of[v] = b;
        }
    }
    block_of
}

fn check_order(g: &Graph, p: &Partition) -> Result<(), LinalgError> {
    if g.order() != p.order {
        return Err(LinalgError::InvalidPartition(format!(
            "partition covers {} vertices but the graph has {}",
            p.order,
            g.order()
        )));
    }
    Ok(())
}

/// Quotient matrix `b_ij = (1/|V_i|) Σ_{u∈V_i} Σ_{v∈V_j} q_uv` of `Q(G)`.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<RationalMatrix, LinalgError> {
    check_order(g, p)?;
    let block_of = block_index(p);
    let m = p.blocks.len();
    let mut totals = vec![0i64; m * m];
    for (i, block) in p.blocks.iter().enumerate() {
        for &u in block {
            for (j, s) in block_row_sums(g, p, u, &block_of).into_iter().enumerate() {
                totals[i * m + j] += s;
            }
        }
    }
    let entries = (0..m * m)
        .map(|k| Rational::new(totals[k].into(), (p.blocks[k / m].len() as i64).into()))
        .collect();
    RationalMatrix::new(m, entries)
}

/// True iff every vertex of `V_i` has the same `Q`-row sum into each `V_j`.
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool, LinalgError> {
    check_order(g, p)?;
    let block_of = block_index(p);
    for block in &p.blocks {
        let first = block_row_sums(g, p, block[0], &block_of);
        if block[1..].iter().any(|&u| block_row_sums(g, p, u, &block_of) != first) {
            return Ok(false);
        }
    }
    Ok(true)
}
