//! Oracles shared by the integration tests. They work from vertex
//! coordinates only and do not call the enumeration or parity code.

#![allow(dead_code)]

use trigrid::{EdgeSet, TriGrid};

/// Endpoint vertex indices of every edge.
pub fn endpoint_table(grid: &TriGrid) -> Vec<[usize; 2]> {
    grid.edges()
        .iter()
        .map(|e| {
            let [a, b] = e.endpoints();
            [grid.vertex_index(a).unwrap(), grid.vertex_index(b).unwrap()]
        })
        .collect()
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Simple cycles of `grid` counted by filtering all `2^|E|` edge subsets:
/// nonempty, every degree 0 or 2, and connected.
pub fn subset_filter_cycle_count(grid: &TriGrid) -> u64 {
    let ends = endpoint_table(grid);
    let m = ends.len();
    assert!(m <= 24, "subset filter is exponential in |E|");
    let nv = grid.num_vertices();
    let mut count = 0;
    let mut deg = vec![0u8; nv];
    let mut parent = vec![0usize; nv];
    for mask in 1u32..(1 << m) {
        deg.iter_mut().for_each(|d| *d = 0);
        for (k, &[a, b]) in ends.iter().enumerate() {
            if mask >> k & 1 == 1 {
                deg[a] += 1;
                deg[b] += 1;
            }
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        let mut components = deg.iter().filter(|&&d| d > 0).count();
        for (k, &[a, b]) in ends.iter().enumerate() {
            if mask >> k & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    components -= 1;
                }
            }
        }
        if components == 1 {
            count += 1;
        }
    }
    count
}

/// Even degree at every vertex and even count on every unit triangle,
/// checked from coordinates.
pub fn is_totally_even_by_coords(grid: &TriGrid, set: &EdgeSet) -> bool {
    let n = grid.n() as i32;
    let has = |a: (i32, i32), b: (i32, i32)| {
        grid.edge_between(trigrid::Vertex::new(a.0, a.1), trigrid::Vertex::new(b.0, b.1))
            .is_some_and(|e| set.contains(e))
    };
    for y in 1..=n + 1 {
        for x in 1..=n + 2 - y {
            let around = [(1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (1, -1)];
            let deg = around.iter().filter(|(dx, dy)| has((x, y), (x + dx, y + dy))).count();
            if deg % 2 == 1 {
                return false;
            }
            // up triangle (x,y),(x+1,y),(x,y+1)
            if x + y <= n + 1 {
                let k = [has((x, y), (x + 1, y)), has((x + 1, y), (x, y + 1)), has((x, y), (x, y + 1))];
                if k.iter().filter(|&&b| b).count() % 2 == 1 {
                    return false;
                }
            }
            // down triangle (x+1,y),(x,y+1),(x+1,y+1)
            if x + y <= n {
                let k = [
                    has((x + 1, y), (x, y + 1)),
                    has((x, y + 1), (x + 1, y + 1)),
                    has((x + 1, y), (x + 1, y + 1)),
                ];
                if k.iter().filter(|&&b| b).count() % 2 == 1 {
                    return false;
                }
            }
        }
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
