//! Twist-region rewrites: validated twist-site ladders and the generalized
//! crossing change that deletes a ladder and reconnects the two strands in
//! the untwisted pattern.

use std::collections::{BTreeMap, BTreeSet};

use super::{Crossing, PlanarDiagram, TwistSite};
use crate::error::{Error, Result};

/// The four external arcs of a ladder plus its parity. `p_*` is the strand
/// traversing the ladder first-to-last crossing, `q_*` the strand running
/// the other way.
struct SiteEnds {
    p_in: usize,
    p_out: usize,
    q_in: usize,
    q_out: usize,
    odd: bool,
}

/// In/out arcs of one passage through a crossing.
fn passages(d: &PlanarDiagram, x: usize) -> [(usize, usize); 2] {
    let [a, b, c, dd] = d.crossings()[x].0;
    let over = if d.crossing_sign(x) > 0 { (dd, b) } else { (b, dd) };
    [(a, c), over]
}

pub(super) fn validate_site(d: &PlanarDiagram, index: usize, site: &TwistSite) -> Result<()> {
    site_ends(d, index, site).map(|_| ())
}

fn site_ends(d: &PlanarDiagram, index: usize, site: &TwistSite) -> Result<Option<SiteEnds>> {
    let bad = |reason: String| Error::MalformedTwistSite {
        site: index,
        reason,
    };
    if site.order == 0 {
        return if site.crossings.is_empty() {
            Ok(None)
        } else {
            Err(bad("order zero site must have no crossings".into()))
        };
    }
    let m = site.order.unsigned_abs() as usize;
    if site.crossings.len() != m {
        return Err(bad(format!(
            "order {} needs {m} crossings, found {}",
            site.order,
            site.crossings.len()
        )));
    }
    let mut seen = BTreeSet::new();
    for &x in &site.crossings {
        if x >= d.crossing_count() {
            return Err(bad(format!("crossing {x} out of range")));
        }
        if !seen.insert(x) {
            return Err(bad(format!("crossing {x} listed twice")));
        }
        if d.crossing_sign(x) != site.order.signum() {
            return Err(bad(format!(
                "crossing {x} has sign {}, ladder of order {} needs {}",
                d.crossing_sign(x),
                site.order,
                site.order.signum()
            )));
        }
    }
    let c = &site.crossings;
    if m == 1 {
        let [(ui, uo), (oi, oo)] = passages(d, c[0]);
        return Ok(Some(SiteEnds {
            p_in: ui,
            p_out: uo,
            q_in: oi,
            q_out: oo,
            odd: true,
        }));
    }
    // Consecutive ladder crossings share exactly two arcs (the rungs).
    let labels: Vec<BTreeSet<usize>> = c
        .iter()
        .map(|&x| d.crossings()[x].0.iter().copied().collect())
        .collect();
    for j in 0..m - 1 {
        let shared: Vec<usize> = labels[j].intersection(&labels[j + 1]).copied().collect();
        if shared.len() != 2 {
            return Err(bad(format!(
                "crossings {} and {} share {} arcs, expected 2",
                c[j],
                c[j + 1],
                shared.len()
            )));
        }
    }
    // Walk the strand entering the ladder at the first crossing.
    let interior_first: BTreeSet<usize> =
        labels[0].intersection(&labels[1]).copied().collect();
    let first = passages(d, c[0]);
    let entries: Vec<(usize, usize)> = first
        .iter()
        .copied()
        .filter(|(inp, _)| !interior_first.contains(inp))
        .collect();
    // Exactly one passage of the first crossing starts outside the ladder;
    // the other belongs to the opposite strand arriving from inside. Zero or
    // two external entries mean the strands run the same way.
    if entries.len() != 1 {
        return Err(bad("ladder strands are not antiparallel".into()));
    }
    let (p_in, mut carry) = entries[0];
    let mut p_crossings = vec![c[0]];
    for j in 1..m {
        let pas = passages(d, c[j]);
        let Some(&(_, out)) = pas.iter().find(|(inp, _)| *inp == carry) else {
            return Err(bad(format!(
                "strand leaves the ladder between crossings {} and {}",
                c[j - 1],
                c[j]
            )));
        };
        p_crossings.push(c[j]);
        carry = out;
    }
    let p_out = carry;
    // The opposite strand enters at the last crossing and walks back. In a
    // spiral region (stacked curls) the knot U-turns there instead, so the
    // return strand is the continuation of the first: q_in = p_out.
    let interior_last: BTreeSet<usize> = labels[m - 1]
        .intersection(&labels[m - 2])
        .copied()
        .collect();
    let last = passages(d, c[m - 1]);
    let q_entries: Vec<(usize, usize)> = last
        .iter()
        .copied()
        .filter(|(inp, _)| !interior_last.contains(inp) && *inp != p_out)
        .collect();
    let (q_in, mut q_carry) = match q_entries.len() {
        1 => q_entries[0],
        0 => match last.iter().copied().find(|(inp, _)| *inp == p_out) {
            Some(u_turn) => u_turn,
            None => return Err(bad("ladder strands are not antiparallel".into())),
        },
        _ => return Err(bad("ladder strands are not antiparallel".into())),
    };
    for j in (0..m - 1).rev() {
        let pas = passages(d, c[j]);
        let Some(&(_, out)) = pas.iter().find(|(inp, _)| *inp == q_carry) else {
            return Err(bad(format!(
                "return strand leaves the ladder at crossing {}",
                c[j]
            )));
        };
        q_carry = out;
    }
    let q_out = q_carry;
    if q_in == p_out && q_out != p_in {
        return Err(bad("spiral region does not close back on itself".into()));
    }
    if p_crossings.len() != m {
        return Err(bad("strand misses part of the ladder".into()));
    }
    Ok(Some(SiteEnds {
        p_in,
        p_out,
        q_in,
        q_out,
        odd: m % 2 == 1,
    }))
}

/// Delete the ladders of the selected twist sites and reconnect the strands
/// in the untwisted pattern, renumbering arcs deterministically. Remaining
/// twist sites are re-indexed onto the new diagram.
pub fn apply_twist_subset(d: &PlanarDiagram, subset: &[usize]) -> Result<PlanarDiagram> {
    let sites = d.twist_sites();
    let mut chosen: Vec<usize> = subset.to_vec();
    chosen.sort_unstable();
    chosen.dedup();
    if chosen.is_empty() {
        return Err(Error::BadPresentation(
            "twist subset must be nonempty".into(),
        ));
    }
    if let Some(&bad) = chosen.iter().find(|&&s| s >= sites.len()) {
        return Err(Error::BadPresentation(format!(
            "twist site {bad} out of range ({} sites)",
            sites.len()
        )));
    }

    let mut removed: BTreeSet<usize> = BTreeSet::new();
    let mut joins: Vec<(usize, usize)> = Vec::new();
    for &si in &chosen {
        let Some(ends) = site_ends(d, si, &sites[si])? else {
            continue; // order-zero site: nothing to remove
        };
        removed.extend(sites[si].crossings.iter().copied());
        if ends.odd {
            joins.push((ends.p_in, ends.q_in));
            joins.push((ends.p_out, ends.q_out));
        } else {
            joins.push((ends.p_in, ends.p_out));
            joins.push((ends.q_in, ends.q_out));
        }
    }

    let survivors: Vec<usize> = (0..d.crossing_count())
        .filter(|x| !removed.contains(x))
        .collect();
    let remaining_sites: Vec<TwistSite> = sites
        .iter()
        .enumerate()
        .filter(|(i, _)| !chosen.contains(i))
        .map(|(_, s)| s.clone())
        .collect();

    if survivors.is_empty() {
        return PlanarDiagram::unknot().with_sites(
            remaining_sites
                .into_iter()
                .map(|s| TwistSite {
                    crossings: Vec::new(),
                    order: s.order,
                })
                .filter(|s| s.order == 0)
                .collect(),
        );
    }

    // Merge arcs across the deleted ladders.
    let total = d.arc_count();
    let mut uf: Vec<usize> = (0..=total).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        let mut c = x;
        while uf[c] != r {
            let n = uf[c];
            uf[c] = r;
            c = n;
        }
        r
    }
    for &(a, b) in &joins {
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        if ra != rb {
            uf[ra] = rb;
        }
    }

    // Attachments of each merged arc to surviving crossing slots.
    let mut attachments: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &x in &survivors {
        for (s, &arc) in d.crossings()[x].0.iter().enumerate() {
            let class = find(&mut uf, arc);
            attachments.entry(class).or_default().push((x, s));
        }
    }
    for (class, at) in &attachments {
        if at.len() != 2 {
            return Err(Error::MalformedTwistSite {
                site: chosen[0],
                reason: format!(
                    "arc class {class} has {} surviving attachments",
                    at.len()
                ),
            });
        }
    }

    // Trace the rebuilt curve, assigning arc labels in walk order.
    let start_class = *attachments.keys().next().unwrap();
    let mut start_attach = attachments[&start_class].clone();
    start_attach.sort_unstable();
    let (x0, s0) = start_attach[0];

    let n_new = survivors.len();
    let mut new_labels: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut entry_slots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let (mut x, mut s) = (x0, s0);
    let mut next_label = 0usize;
    for _ in 0..2 * n_new {
        entry_slots.entry(x).or_default().push(s);
        let t = (s + 2) % 4;
        next_label += 1;
        let out_class = find(&mut uf, d.crossings()[x].0[t]);
        new_labels.insert((x, t), next_label);
        let at = &attachments[&out_class];
        let (y, u) = if at[0] == (x, t) { at[1] } else { at[0] };
        new_labels.insert((y, u), next_label);
        x = y;
        s = u;
    }
    if (x, s) != (x0, s0) {
        return Err(Error::MalformedTwistSite {
            site: chosen[0],
            reason: "rewired diagram is not a single closed curve".into(),
        });
    }
    for (&x, slots) in &entry_slots {
        if slots.len() != 2 {
            return Err(Error::MalformedTwistSite {
                site: chosen[0],
                reason: format!("crossing {x} visited {} times", slots.len()),
            });
        }
    }

    // Rebuild quadruples: rotate each surviving crossing so slot 0 is the
    // new incoming under-strand.
    let mut index_map: BTreeMap<usize, usize> = BTreeMap::new();
    let mut crossings = Vec::with_capacity(n_new);
    for (new_idx, &xold) in survivors.iter().enumerate() {
        index_map.insert(xold, new_idx);
        let under_entry = entry_slots[&xold]
            .iter()
            .copied()
            .find(|s| *s == 0 || *s == 2)
            .expect("each crossing is entered once on the under-strand");
        let mut ends = [0usize; 4];
        for (k, end) in ends.iter_mut().enumerate() {
            *end = new_labels[&(xold, (under_entry + k) % 4)];
        }
        crossings.push(Crossing(ends));
    }
    let rebuilt = PlanarDiagram::new(crossings)?;
    // Re-derive the remaining sites on the rewritten diagram. Deleting an
    // odd ladder reverses one strand segment, which can flip the signs of
    // surviving crossings; the twist order keeps its magnitude and takes the
    // sign of the new crossings. A site whose ladder no longer runs between
    // antiparallel strands stops being a generalized crossing and is dropped.
    let mut remapped = Vec::new();
    for s in remaining_sites {
        let crossings: Vec<usize> = s.crossings.iter().map(|c| index_map[c]).collect();
        let order = if s.order == 0 {
            0
        } else {
            let new_sign = rebuilt.crossing_sign(crossings[0]);
            s.order.abs() * new_sign
        };
        let candidate = TwistSite { crossings, order };
        if site_ends(&rebuilt, remapped.len(), &candidate).is_ok() {
            remapped.push(candidate);
        }
    }
    rebuilt.with_sites(remapped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{alexander_from_pd, kauffman_jones, parse_pd, DEFAULT_CROSSING_CAP};
    use crate::laurent::LaurentPoly;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// Trefoil drawn with three 1-crossing antiparallel twist columns.
    pub(crate) fn pretzel_trefoil() -> PlanarDiagram {
        super::super::fixtures::pretzel_trefoil()
    }

    #[test]
    fn pretzel_fixture_is_a_trefoil_with_valid_sites() {
        let d = pretzel_trefoil();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(alexander_from_pd(&d).unwrap(), poly("1 - t + t^2"));
        assert_eq!(d.twist_sites().len(), 3);
    }

    #[test]
    fn removing_one_column_unknots_the_pretzel() {
        let d = pretzel_trefoil();
        for site in 0..3 {
            let out = apply_twist_subset(&d, &[site]).unwrap();
            assert_eq!(out.crossing_count(), 2);
            assert_eq!(alexander_from_pd(&out).unwrap(), poly("1"), "site {site}");
            assert!(
                kauffman_jones(&out, DEFAULT_CROSSING_CAP)
                    .unwrap()
                    .is_trivial(),
                "site {site}"
            );
        }
    }

    #[test]
    fn subsets_are_order_independent_at_invariant_level() {
        let d = pretzel_trefoil();
        let combined = apply_twist_subset(&d, &[0, 2]).unwrap();
        let sequential = {
            let first = apply_twist_subset(&d, &[0]).unwrap();
            // After removal the remaining sites are re-indexed; old site 2
            // is now site 1.
            apply_twist_subset(&first, &[1]).unwrap()
        };
        assert_eq!(
            alexander_from_pd(&combined).unwrap(),
            alexander_from_pd(&sequential).unwrap()
        );
        let jc = kauffman_jones(&combined, DEFAULT_CROSSING_CAP).unwrap();
        let js = kauffman_jones(&sequential, DEFAULT_CROSSING_CAP).unwrap();
        assert_eq!(jc.polynomial, js.polynomial);
    }

    #[test]
    fn removing_everything_leaves_the_unknot() {
        let d = pretzel_trefoil();
        let out = apply_twist_subset(&d, &[0, 1, 2]).unwrap();
        assert_eq!(out.crossing_count(), 0);
    }

    #[test]
    fn order_zero_site_is_a_relabeling() {
        let d = parse_pd("X[3,6,4,1] X[1,4,2,5] X[5,2,6,3]")
            .unwrap()
            .with_sites(vec![TwistSite {
                crossings: vec![],
                order: 0,
            }])
            .unwrap();
        let out = apply_twist_subset(&d, &[0]).unwrap();
        assert_eq!(out.crossing_count(), 3);
        assert_eq!(
            alexander_from_pd(&out).unwrap(),
            alexander_from_pd(&d).unwrap()
        );
    }

    #[test]
    fn spiral_regions_untwist_to_the_unknot() {
        // Two stacked curls form an order -2 twist region in which the
        // strand U-turns at the bottom of the ladder.
        let d = parse_pd("X[1,4,2,1] X[2,3,3,4]")
            .unwrap()
            .with_sites(vec![TwistSite {
                crossings: vec![0, 1],
                order: -2,
            }])
            .unwrap();
        assert_eq!(alexander_from_pd(&d).unwrap(), poly("1"));
        let out = apply_twist_subset(&d, &[0]).unwrap();
        assert_eq!(out.crossing_count(), 0);
    }

    #[test]
    fn parallel_strand_ladders_are_rejected() {
        // In the closed-braid trefoil both strands run the same way through
        // any two consecutive crossings.
        let d = parse_pd("X[3,6,4,1] X[1,4,2,5] X[5,2,6,3]").unwrap();
        let err = d
            .with_sites(vec![TwistSite {
                crossings: vec![0, 1],
                order: -2,
            }])
            .unwrap_err();
        assert!(matches!(err, Error::MalformedTwistSite { .. }));
    }
}
