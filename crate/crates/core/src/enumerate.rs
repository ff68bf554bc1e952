//! Exhaustive generation of AG-groupoids by row-major backtracking, with
//! canonical forms for isomorphism reduction.
//!
//! The search is split into independent subtrees, one per assignment of the
//! first free row. Subtrees run in parallel and are merged in prefix order,
//! so the output does not depend on scheduling. A checkpoint file records
//! finished subtrees together with what they produced; resuming replays
//! those lines instead of searching again.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::witness;

/// Default largest order for [`enumerate_ag`].
pub const DEFAULT_ORDER_CAP: usize = 5;
/// Largest order reachable with [`SearchOptions::allow_order6`].
pub const EXTENDED_ORDER_CAP: usize = 6;
/// Largest order for the factorial scans in [`canonical_form`].
pub const CANONICAL_CAP: usize = 8;

const FREE: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConstraints {
    pub order: usize,
    pub require_unitary: bool,
    pub require_intra_regular: bool,
    pub up_to_isomorphism: bool,
}

impl SearchConstraints {
    pub fn all(order: usize) -> Self {
        SearchConstraints {
            order,
            require_unitary: false,
            require_intra_regular: false,
            up_to_isomorphism: false,
        }
    }

    pub fn unitary(mut self) -> Self {
        self.require_unitary = true;
        self
    }

    pub fn intra_regular(mut self) -> Self {
        self.require_intra_regular = true;
        self
    }

    pub fn up_to_iso(mut self) -> Self {
        self.up_to_isomorphism = true;
        self
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Order 6 is large; it must be asked for explicitly.
    pub allow_order6: bool,
    pub checkpoint: Option<PathBuf>,
}

/// All AG-groupoids meeting `constraints`, ascending by flattened table.
pub fn enumerate_ag(constraints: SearchConstraints) -> Result<Vec<Groupoid>> {
    enumerate_ag_with(constraints, &SearchOptions::default())
}

pub fn enumerate_ag_with(
    constraints: SearchConstraints,
    options: &SearchOptions,
) -> Result<Vec<Groupoid>> {
    let n = constraints.order;
    let tables = search(constraints, options)?;
    Ok(tables
        .into_iter()
        .map(|t| Groupoid::from_flat(n, t, Groupoid::default_labels(n)))
        .collect())
}

pub fn count_ag(constraints: SearchConstraints, options: &SearchOptions) -> Result<usize> {
    Ok(search(constraints, options)?.len())
}

fn validate(c: &SearchConstraints, options: &SearchOptions) -> Result<()> {
    let cap = if options.allow_order6 {
        EXTENDED_ORDER_CAP
    } else {
        DEFAULT_ORDER_CAP
    };
    if c.order == 0 {
        return Err(Error::EmptyCarrier);
    }
    if c.order > cap {
        return Err(Error::OrderTooLarge {
            order: c.order,
            max: cap,
        });
    }
    Ok(())
}

fn search(c: SearchConstraints, options: &SearchOptions) -> Result<Vec<Vec<u8>>> {
    validate(&c, options)?;
    let n = c.order;
    let mut base = vec![FREE; n * n];
    // pinning a left identity at 0 is only sound modulo isomorphism
    let pin_identity = c.require_unitary && c.up_to_isomorphism;
    let split_row = if pin_identity {
        for x in 0..n {
            base[x] = x as u8;
        }
        1
    } else {
        0
    };
    // a unitary order-1 table is already complete
    let prefixes: Vec<Vec<u8>> = if split_row >= n {
        vec![Vec::new()]
    } else {
        row_assignments(n)
    };

    let mut done = match &options.checkpoint {
        Some(path) => Checkpoint::load(path, n)?,
        None => BTreeMap::new(),
    };
    let mut writer = match &options.checkpoint {
        Some(path) => Some(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::Checkpoint(e.to_string()))?,
        ),
        None => None,
    };

    let todo: Vec<&Vec<u8>> = prefixes.iter().filter(|p| !done.contains_key(*p)).collect();
    for chunk in todo.chunks(256) {
        let results: Vec<Vec<Vec<u8>>> = chunk
            .par_iter()
            .map(|prefix| subtree(&base, split_row, prefix, &c))
            .collect();
        for (prefix, found) in chunk.iter().zip(results) {
            if let Some(w) = writer.as_mut() {
                Checkpoint::append(w, prefix, &found)?;
            }
            done.insert((*prefix).clone(), found);
        }
    }

    let mut out: Vec<Vec<u8>> = prefixes
        .iter()
        .flat_map(|p| done.remove(p).unwrap_or_default())
        .collect();
    if c.up_to_isomorphism && c.require_unitary {
        let set: BTreeSet<Vec<u8>> = out.iter().map(|t| canonical_flat(n, t)).collect();
        out = set.into_iter().collect();
    }
    Ok(out)
}

/// Every assignment of one row, ascending.
fn row_assignments(n: usize) -> Vec<Vec<u8>> {
    let total = n.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut row = vec![0u8; n];
            for cell in row.iter_mut().rev() {
                *cell = (code % n) as u8;
                code /= n;
            }
            row
        })
        .collect()
}

fn subtree(base: &[u8], row: usize, prefix: &[u8], c: &SearchConstraints) -> Vec<Vec<u8>> {
    let n = c.order;
    let mut table = base.to_vec();
    let mut out = Vec::new();
    for (col, &v) in prefix.iter().enumerate() {
        let cell = row * n + col;
        table[cell] = v;
        if !consistent_after(&table, n, cell) {
            return out;
        }
    }
    dfs(&mut table, n, row * n + prefix.len(), c, &mut out);
    out
}

fn dfs(table: &mut [u8], n: usize, cell: usize, c: &SearchConstraints, out: &mut Vec<Vec<u8>>) {
    if cell == n * n {
        accept(table, c, out);
        return;
    }
    if table[cell] != FREE {
        dfs(table, n, cell + 1, c, out);
        return;
    }
    for v in 0..n as u8 {
        table[cell] = v;
        if consistent_after(table, n, cell) {
            dfs(table, n, cell + 1, c, out);
        }
    }
    table[cell] = FREE;
}

fn accept(table: &[u8], c: &SearchConstraints, out: &mut Vec<Vec<u8>>) {
    let n = c.order;
    if c.require_unitary && !has_left_identity(table, n) {
        return;
    }
    if c.require_intra_regular {
        let g = Groupoid::from_flat(n, table.to_vec(), Groupoid::default_labels(n));
        if !witness::is_intra_regular(&g).holds {
            return;
        }
    }
    if c.up_to_isomorphism && !c.require_unitary && !is_canonical(n, table) {
        return;
    }
    out.push(table.to_vec());
}

fn has_left_identity(table: &[u8], n: usize) -> bool {
    (0..n).any(|e| (0..n).all(|x| table[e * n + x] as usize == x))
}

#[inline]
fn get(table: &[u8], n: usize, a: usize, b: usize) -> Option<usize> {
    let v = table[a * n + b];
    (v != FREE).then_some(v as usize)
}

/// `(x·y)·z = (z·y)·x` for one triple, if all four products are known.
#[inline]
fn triple_ok(table: &[u8], n: usize, x: usize, y: usize, z: usize) -> bool {
    let Some(xy) = get(table, n, x, y) else {
        return true;
    };
    let Some(lhs) = get(table, n, xy, z) else {
        return true;
    };
    let Some(zy) = get(table, n, z, y) else {
        return true;
    };
    let Some(rhs) = get(table, n, zy, x) else {
        return true;
    };
    lhs == rhs
}

/// Checks every left-invertive instance that uses the cell just assigned.
fn consistent_after(table: &[u8], n: usize, cell: usize) -> bool {
    let (a, b) = (cell / n, cell % n);
    for t in 0..n {
        // the cell is x·y or z·y
        if !triple_ok(table, n, a, b, t) || !triple_ok(table, n, t, b, a) {
            return false;
        }
    }
    for x in 0..n {
        for y in 0..n {
            if table[x * n + y] as usize == a && table[x * n + y] != FREE {
                // the cell is (x·y)·z with z = b, or (z·y)·x with x = b
                if !triple_ok(table, n, x, y, b) || !triple_ok(table, n, b, y, x) {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographically least relabeling (flattened row-major) of a table.
pub fn canonical_form(g: &Groupoid) -> Result<Groupoid> {
    let n = g.order();
    if n > CANONICAL_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            max: CANONICAL_CAP,
        });
    }
    let perm = canonical_perm(n, g.flat());
    Ok(g.permuted(&perm))
}

/// First permutation, in lexicographic order, that yields the least table.
fn canonical_perm(n: usize, table: &[u8]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best_perm = perm.clone();
    let mut best = permuted_flat(n, table, &perm);
    let mut inv = vec![0usize; n];
    while next_permutation(&mut perm) {
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        if permuted_less(n, table, &perm, &inv, &best) {
            best = permuted_flat(n, table, &perm);
            best_perm = perm.clone();
        }
    }
    best_perm
}

fn canonical_flat(n: usize, table: &[u8]) -> Vec<u8> {
    let perm = canonical_perm(n, table);
    permuted_flat(n, table, &perm)
}

fn is_canonical(n: usize, table: &[u8]) -> bool {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut inv = vec![0usize; n];
    while next_permutation(&mut perm) {
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        if permuted_less(n, table, &perm, &inv, table) {
            return false;
        }
    }
    true
}

fn permuted_flat(n: usize, table: &[u8], perm: &[usize]) -> Vec<u8> {
    let mut out = vec![0u8; n * n];
    for a in 0..n {
        for b in 0..n {
            out[perm[a] * n + perm[b]] = perm[table[a * n + b] as usize] as u8;
        }
    }
    out
}

/// Is the relabeled table strictly below `bound`? Stops at the first
/// differing cell.
fn permuted_less(n: usize, table: &[u8], perm: &[usize], inv: &[usize], bound: &[u8]) -> bool {
    for i in 0..n {
        for j in 0..n {
            let v = perm[table[inv[i] * n + inv[j]] as usize] as u8;
            let w = bound[i * n + j];
            if v != w {
                return v < w;
            }
        }
    }
    false
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A relabeling `p` with `p(a·b) = p(a)·p(b)` carrying `g` onto `h`.
pub fn are_isomorphic(g: &Groupoid, h: &Groupoid) -> Result<Option<Vec<usize>>> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch {
            subset: h.order(),
            groupoid: g.order(),
        });
    }
    let n = g.order();
    if n > CANONICAL_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            max: CANONICAL_CAP,
        });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ok = (0..n).all(|a| (0..n).all(|b| perm[g.mul(a, b)] == h.mul(perm[a], perm[b])));
        if ok {
            return Ok(Some(perm));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

struct Checkpoint;

impl Checkpoint {
    fn encode(cells: &[u8]) -> String {
        cells
            .iter()
            .map(|&v| char::from_digit(v as u32, 36).expect("order ≤ 36"))
            .collect()
    }

    fn decode(text: &str, n: usize) -> Option<Vec<u8>> {
        text.chars()
            .map(|c| {
                c.to_digit(36)
                    .filter(|&d| (d as usize) < n)
                    .map(|d| d as u8)
            })
            .collect()
    }

    /// One line per finished subtree: `<prefix cells>\t<count>\t<tables>`,
    /// cells in base 36, tables separated by `;`.
    fn append(w: &mut File, prefix: &[u8], found: &[Vec<u8>]) -> Result<()> {
        let cells: Vec<String> = prefix.iter().map(|v| v.to_string()).collect();
        let tables: Vec<String> = found.iter().map(|t| Self::encode(t)).collect();
        writeln!(
            w,
            "{}\t{}\t{}",
            cells.join(" "),
            found.len(),
            tables.join(";")
        )
        .and_then(|_| w.flush())
        .map_err(|e| Error::Checkpoint(e.to_string()))
    }

    fn load(path: &Path, n: usize) -> Result<BTreeMap<Vec<u8>, Vec<Vec<u8>>>> {
        let mut done = BTreeMap::new();
        let file = match File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
            Err(e) => return Err(Error::Checkpoint(e.to_string())),
        };
        for (lineno, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| Error::Checkpoint(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = || Error::Checkpoint(format!("line {}: malformed", lineno + 1));
            let mut fields = line.split('\t');
            let prefix: Vec<u8> = fields
                .next()
                .ok_or_else(bad)?
                .split_whitespace()
                .map(|t| t.parse::<u8>().ok().filter(|&v| (v as usize) < n))
                .collect::<Option<_>>()
                .ok_or_else(bad)?;
            let count: usize = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let tables_field = fields.next().unwrap_or("");
            let tables: Vec<Vec<u8>> = if tables_field.is_empty() {
                Vec::new()
            } else {
                tables_field
                    .split(';')
                    .map(|t| Self::decode(t, n).filter(|v| v.len() == n * n))
                    .collect::<Option<_>>()
                    .ok_or_else(bad)?
            };
            if tables.len() != count {
                return Err(bad());
            }
            done.insert(prefix, tables);
        }
        Ok(done)
    }
}
