use crate::edge::EdgeState;
use crate::spec::{LatticeSpec, Row};
use crate::transfer::LatticeConfig;
use crate::weights::RowKind;
use crate::LatticeError;

/// Color `i` becomes `k + 1 - i`.
fn reverse_colors(s: EdgeState, k: usize) -> EdgeState {
    EdgeState((0..k).filter(|&i| (s.0 >> i) & 1 == 1).map(|i| 1 << (k - 1 - i)).sum())
}

fn flip_vertical(s: EdgeState, k: usize) -> EdgeState {
    reverse_colors(EdgeState(s.0 ^ EdgeState::full(k).0), k)
}

/// The lattice `psi` maps onto: columns reflected by `c -> 1 - c`, vertical
/// boundary edges complemented, colors reversed, white and purple swapped.
pub fn psi_spec(spec: &LatticeSpec) -> Result<LatticeSpec, LatticeError> {
    let k = spec.k;
    let rows = spec
        .rows
        .iter()
        .map(|r| {
            let kind = match r.kind {
                RowKind::White => RowKind::Purple,
                RowKind::Purple => RowKind::White,
                _ => return Err(LatticeError::Boundary("psi needs white or purple rows".into())),
            };
            if !(r.left.is_empty() && r.right.is_empty()) {
                return Err(LatticeError::Boundary("psi needs empty sides".into()));
            }
            Ok(Row { kind, ..r.clone() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let map = |v: &[EdgeState]| v.iter().rev().map(|&s| flip_vertical(s, k)).collect::<Vec<_>>();
    LatticeSpec::new(k, 1 - spec.cmax, 1 - spec.cmin, 0, rows, map(&spec.bottom), map(&spec.top))
}

/// Inverts vertical path segments, reflects over the left edge and reverses
/// colors. Applying it twice is the identity.
pub fn psi(cfg: &LatticeConfig, k: usize) -> LatticeConfig {
    LatticeConfig {
        levels: cfg
            .levels
            .iter()
            .map(|l| l.iter().rev().map(|&s| flip_vertical(s, k)).collect())
            .collect(),
        horizontals: cfg
            .horizontals
            .iter()
            .map(|h| h.iter().rev().map(|&s| reverse_colors(s, k)).collect())
            .collect(),
    }
}
