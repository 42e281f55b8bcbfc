use crate::edge::EdgeState;
use crate::spec::LatticeSpec;
use crate::transfer::LatticeConfig;
use crate::weights::{face_weight, RowKind};

fn faces<'a>(spec: &LatticeSpec, cfg: &'a LatticeConfig, r: usize) -> impl Iterator<Item = [EdgeState; 4]> + 'a {
    let w = spec.width();
    let (lo, hi, h) = (&cfg.levels[r], &cfg.levels[r + 1], &cfg.horizontals[r]);
    (0..w).map(move |c| [lo[c], h[c], hi[c], h[c + 1]])
}

/// Spin of one face: for each color `a` that counts (present in white
/// faces, vertical in purple ones), the smaller colors leaving right plus the
/// larger colors entering from the left.
pub fn face_spin(kind: RowKind, k: usize, e: [EdgeState; 4]) -> u32 {
    let [i, j, kk, l] = e;
    let mut total = 0;
    for a in 1..=k {
        let counts = match kind {
            RowKind::White => i.has(a) || j.has(a) || kk.has(a) || l.has(a),
            RowKind::Purple => i.has(a) && kk.has(a) && !j.has(a) && !l.has(a),
            _ => false,
        };
        if counts {
            total += (1..a).filter(|&b| l.has(b)).count() as u32;
            total += (a + 1..=k).filter(|&b| j.has(b)).count() as u32;
        }
    }
    total
}

/// Sum of [`face_spin`] over the white and purple faces.
pub fn spin_count(spec: &LatticeSpec, cfg: &LatticeConfig) -> u32 {
    (0..spec.rows.len())
        .map(|r| faces(spec, cfg, r).map(|e| face_spin(spec.rows[r].kind, spec.k, e)).sum::<u32>())
        .sum()
}

/// Powers of `t` contributed by white faces and by purple faces.
pub fn coinv_stats(spec: &LatticeSpec, cfg: &LatticeConfig) -> (i64, i64) {
    let mut out = (0i64, 0i64);
    for (r, row) in spec.rows.iter().enumerate() {
        let t: i64 = faces(spec, cfg, r)
            .map(|e| face_weight(row.kind, spec.k, e).map_or(0, |w| w.1 as i64))
            .sum();
        match row.kind {
            RowKind::White => out.0 += t,
            RowKind::Purple => out.1 += t,
            _ => {}
        }
    }
    out
}

/// Twice the box statistic: `2 (coinv + coinv') - spin`.
pub fn box_statistic(spec: &LatticeSpec, cfg: &LatticeConfig) -> i64 {
    let (a, b) = coinv_stats(spec, cfg);
    2 * (a + b) - spin_count(spec, cfg) as i64
}
