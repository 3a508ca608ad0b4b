use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::code::{Symbol, TreeCode};

/// A rooted tree with ordered children. Node ids are arbitrary; the labels
/// `v_0 .. v_k` are recomputed by a right-to-left breadth-first search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedTree {
    root: usize,
    children: Vec<Vec<usize>>,
}

impl OrderedTree {
    /// Decodes a tree code: labels descend, stars climb back.
    pub fn from_code(code: &TreeCode) -> Self {
        let k = code.k();
        let mut children = vec![Vec::new(); k + 1];
        let mut stack: Vec<usize> = Vec::with_capacity(k + 1);
        for &sym in code.symbols() {
            match sym {
                Symbol::Color(c) => {
                    let c = usize::from(c);
                    if let Some(&top) = stack.last() {
                        children[top].push(c);
                    }
                    stack.push(c);
                }
                Symbol::Star => {
                    stack.pop();
                }
            }
        }
        OrderedTree { root: 0, children }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    pub fn edge_count(&self) -> usize {
        self.children.len() - 1
    }

    /// Nodes of degree one in the underlying free tree.
    pub fn leaf_count(&self) -> usize {
        (0..self.node_count())
            .filter(|&v| {
                let up = usize::from(v != self.root);
                self.children[v].len() + up == 1
            })
            .count()
    }

    /// Label of every node id, in right-to-left breadth-first order.
    pub fn labels(&self) -> Vec<u8> {
        let mut labels = vec![0u8; self.node_count()];
        let mut queue = VecDeque::from([self.root]);
        let mut next = 0u8;
        while let Some(v) = queue.pop_front() {
            labels[v] = next;
            next += 1;
            queue.extend(self.children[v].iter().rev());
        }
        labels
    }

    /// Depth-first encoding with right-to-left breadth-first labels.
    pub fn code(&self) -> TreeCode {
        let labels = self.labels();
        let mut symbols = Vec::with_capacity(2 * self.node_count() - 1);
        // (node, next child index)
        let mut stack = vec![(self.root, 0usize)];
        symbols.push(Symbol::Color(labels[self.root]));
        while let Some(&mut (v, ref mut j)) = stack.last_mut() {
            if let Some(&c) = self.children[v].get(*j) {
                *j += 1;
                symbols.push(Symbol::Color(labels[c]));
                stack.push((c, 0));
            } else {
                stack.pop();
                if !stack.is_empty() {
                    symbols.push(Symbol::Star);
                }
            }
        }
        TreeCode::from_symbols_unchecked(symbols)
    }

    /// Moves the root to its leftmost child; the old root becomes the last
    /// child of the new root.
    pub fn root_rotate(&self) -> Self {
        let old = self.root;
        let Some(&new) = self.children[old].first() else {
            return self.clone();
        };
        let mut children = self.children.clone();
        children[old].remove(0);
        children[new].push(old);
        OrderedTree { root: new, children }
    }

    /// Horizontal reflection: every child list reversed.
    pub fn mirror(&self) -> Self {
        OrderedTree {
            root: self.root,
            children: self
                .children
                .iter()
                .map(|c| c.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Codes met by repeated root rotation until the first one recurs.
    pub fn rotation_orbit(&self) -> Vec<TreeCode> {
        let first = self.code();
        let mut orbit = vec![first.clone()];
        let mut t = self.root_rotate();
        loop {
            let c = t.code();
            if c == first {
                return orbit;
            }
            orbit.push(c);
            t = t.root_rotate();
        }
    }

    /// Representative of the plane tree: least code over the rotation orbit.
    pub fn plane_canonical(&self) -> TreeCode {
        self.rotation_orbit()
            .into_iter()
            .min()
            .expect("orbit is never empty")
    }

    pub fn to_dot(&self) -> String {
        let labels = self.labels();
        let mut out = String::from("digraph tree {\n");
        for (v, label) in labels.iter().enumerate() {
            let _ = writeln!(out, "  n{v} [label=\"v{label}\"];");
        }
        for (v, kids) in self.children.iter().enumerate() {
            for (ord, c) in kids.iter().enumerate() {
                let _ = writeln!(out, "  n{v} -> n{c} [ordinal={ord}];");
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn tree_of_code(code: &TreeCode) -> OrderedTree {
    OrderedTree::from_code(code)
}

pub fn code_of_tree(tree: &OrderedTree) -> TreeCode {
    tree.code()
}
