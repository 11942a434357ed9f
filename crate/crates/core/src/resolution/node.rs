//! The resolution graph: nodes are boundary maps, edges split each kernel
//! into independent covering problems, and a cache keyed by the literal
//! boundary data lets an infinite resolution close up into a finite graph.

use std::collections::{BTreeMap, HashMap};

use dashu_int::{IBig, UBig};

use super::cover::cover_by_mapping;
use super::module::{
    augmentation_matrix, boundary_as_int_matrix, trailing_kernel, BoundaryMatrix, MonoidContext,
};
use crate::dsf::DisjointSetForest;
use crate::error::{Error, Result};
use crate::linalg::{direct_sum, homology_from_matrices, FinAbGroup, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResolutionCaps {
    pub max_nodes: usize,
    pub max_rank: usize,
    pub max_shift: usize,
}

impl Default for ResolutionCaps {
    fn default() -> Self {
        ResolutionCaps {
            max_nodes: 100_000,
            max_rank: 100_000,
            max_shift: 1_000_000,
        }
    }
}

/// A child covers the kernel on one block of this node's domain summands.
#[derive(Debug, Clone)]
pub struct Child {
    pub node: usize,
    /// Indices into the parent's domain summands, ascending.
    pub summands: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ResolutionNode {
    boundary: BoundaryMatrix,
    children: Option<Vec<Child>>,
    hcache: HashMap<usize, FinAbGroup>,
}

impl ResolutionNode {
    pub fn boundary(&self) -> &BoundaryMatrix {
        &self.boundary
    }

    pub fn children(&self) -> Option<&[Child]> {
        self.children.as_deref()
    }

    pub fn cached(&self, shift: usize) -> Option<&FinAbGroup> {
        self.hcache.get(&shift)
    }
}

type NodeKey = BoundaryMatrix;

#[derive(Debug, Clone)]
pub struct Resolution {
    ctx: MonoidContext,
    nodes: Vec<ResolutionNode>,
    cache: HashMap<NodeKey, usize>,
    caps: ResolutionCaps,
}

impl Resolution {
    pub fn new(ctx: MonoidContext, caps: ResolutionCaps) -> Self {
        Resolution {
            ctx,
            nodes: Vec::new(),
            cache: HashMap::new(),
            caps,
        }
    }

    pub fn context(&self) -> &MonoidContext {
        &self.ctx
    }

    pub fn node(&self, id: usize) -> &ResolutionNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Returns the node for `boundary`, creating it on a cache miss.
    pub fn intern(&mut self, boundary: BoundaryMatrix) -> Result<usize> {
        if let Some(&id) = self.cache.get(&boundary) {
            return Ok(id);
        }
        if self.nodes.len() >= self.caps.max_nodes {
            return Err(Error::ResourceCapExceeded(format!(
                "more than {} resolution nodes",
                self.caps.max_nodes
            )));
        }
        let rank = boundary.domain().rank();
        if rank > self.caps.max_rank {
            return Err(Error::ResourceCapExceeded(format!(
                "node of Z-rank {rank} exceeds {}",
                self.caps.max_rank
            )));
        }
        let id = self.nodes.len();
        self.cache.insert(boundary.clone(), id);
        self.nodes.push(ResolutionNode {
            boundary,
            children: None,
            hcache: HashMap::new(),
        });
        Ok(id)
    }

    /// Splits the kernel of the node's boundary into blocks of summands that
    /// share kernel vectors and covers each block separately.
    pub fn make_children(&mut self, id: usize) -> Result<()> {
        if self.nodes[id].children.is_some() {
            return Ok(());
        }
        let boundary = &self.nodes[id].boundary;
        let domain = boundary.domain().clone();
        let kernel = trailing_kernel(&boundary_as_int_matrix(&self.ctx, boundary));

        let mut forest = DisjointSetForest::new(domain.summands());
        let mut touched = vec![false; domain.summands()];
        for v in &kernel {
            let mut first = None;
            for (coord, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let j = domain.summand_of(coord);
                touched[j] = true;
                match first {
                    None => first = Some(j),
                    Some(f) => {
                        forest.merge(f, j);
                    }
                }
            }
        }
        // blocks keyed by their smallest summand
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut block_of_root = HashMap::new();
        for j in (0..domain.summands()).filter(|&j| touched[j]) {
            let root = forest.find(j);
            let first = *block_of_root.entry(root).or_insert(j);
            blocks.entry(first).or_default().push(j);
        }
        let mut vectors: BTreeMap<usize, Vec<Vec<IBig>>> = BTreeMap::new();
        for v in kernel {
            let coord = v.iter().position(|x| !x.is_zero()).unwrap();
            let first = block_of_root[&forest.find(domain.summand_of(coord))];
            let restricted: Vec<IBig> = blocks[&first]
                .iter()
                .flat_map(|&j| v[domain.block(j)].iter().cloned())
                .collect();
            vectors.entry(first).or_default().push(restricted);
        }

        let mut children = Vec::with_capacity(blocks.len());
        for (first, summands) in blocks {
            let idempotents = summands.iter().map(|&j| domain.idempotents()[j]).collect();
            let codomain = self.ctx.module(idempotents);
            let cover = cover_by_mapping(&self.ctx, &codomain, &vectors[&first]);
            let node = self.intern(cover)?;
            children.push(Child { node, summands });
        }
        self.nodes[id].children = Some(children);
        Ok(())
    }

    /// `ker(ε⊗∂) / im(ε⊗∂′)` at this node's domain, with `∂′` the children's
    /// boundaries placed at their blocks.
    pub fn compute_homology(&mut self, id: usize) -> Result<FinAbGroup> {
        self.make_children(id)?;
        let node = &self.nodes[id];
        let m_out = augmentation_matrix(&node.boundary);
        let rows = node.boundary.domain().summands();
        let mut images = Vec::new();
        let mut cols = 0;
        for child in node.children.as_ref().unwrap() {
            let aug = augmentation_matrix(&self.nodes[child.node].boundary);
            images.push((cols, child.summands.clone(), aug.clone()));
            cols += aug.cols();
        }
        let mut m_in = IntMatrix::zeros(rows, cols);
        for (c0, summands, aug) in images {
            for (r, &j) in summands.iter().enumerate() {
                for c in 0..aug.cols() {
                    m_in.set(j, c0 + c, aug.get(r, c).clone());
                }
            }
        }
        homology_from_matrices(&m_out, &m_in)
    }

    /// Homology `shift` steps below this node, memoized per node and shift.
    pub fn homology_with_shift(&mut self, id: usize, shift: usize) -> Result<FinAbGroup> {
        Ok(self.homology_range(id, shift + 1)?.pop().unwrap())
    }

    /// Shifts `0..count` from `id`, evaluated level by level so that long
    /// chains never recurse.
    pub fn homology_range(&mut self, id: usize, count: usize) -> Result<Vec<FinAbGroup>> {
        if count == 0 {
            return Ok(Vec::new());
        }
        if count - 1 > self.caps.max_shift {
            return Err(Error::ResourceCapExceeded(format!(
                "shift {} exceeds {}",
                count - 1,
                self.caps.max_shift
            )));
        }
        // minimal depth of every node reachable within count - 1 steps
        let mut depth: HashMap<usize, usize> = HashMap::from([(id, 0)]);
        let mut frontier = vec![id];
        let mut d = 0;
        while !frontier.is_empty() && d + 1 < count {
            let mut next = Vec::new();
            for &n in &frontier {
                self.make_children(n)?;
                for child in self.nodes[n].children.as_ref().unwrap() {
                    if let std::collections::hash_map::Entry::Vacant(slot) = depth.entry(child.node) {
                        slot.insert(d + 1);
                        next.push(child.node);
                    }
                }
            }
            frontier = next;
            d += 1;
        }
        let mut by_depth: Vec<(usize, usize)> = depth.into_iter().map(|(n, d)| (d, n)).collect();
        by_depth.sort_unstable();

        let mut out = Vec::with_capacity(count);
        for t in 0..count {
            // nodes needing shift t are those with depth + t < count
            for &(d, n) in &by_depth {
                if d + t >= count || self.nodes[n].hcache.contains_key(&t) {
                    continue;
                }
                let h = if t == 0 {
                    self.compute_homology(n)?
                } else {
                    let mut mult: BTreeMap<usize, UBig> = BTreeMap::new();
                    for child in self.nodes[n].children.as_ref().unwrap() {
                        *mult.entry(child.node).or_insert(UBig::ZERO) += UBig::ONE;
                    }
                    let parts: Vec<(&FinAbGroup, UBig)> = mult
                        .into_iter()
                        .map(|(c, m)| (&self.nodes[c].hcache[&(t - 1)], m))
                        .collect();
                    direct_sum(parts)
                };
                self.nodes[n].hcache.insert(t, h);
            }
            out.push(self.nodes[id].hcache[&t].clone());
        }
        Ok(out)
    }
}
