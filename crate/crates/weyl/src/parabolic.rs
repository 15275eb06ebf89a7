//! Finite parabolic subgroups: Dynkin components and their degrees.

use affine_cartan::AffineCartanData;

/// Connected components of the Dynkin subdiagram on `nodes` (1-based simple indices).
pub fn components(data: &AffineCartanData, nodes: &[usize]) -> Vec<Vec<usize>> {
    let m = data.affine_cartan_matrix();
    let mut seen = vec![false; nodes.len()];
    let mut out = Vec::new();
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![nodes[start]];
        let mut k = 0;
        while k < comp.len() {
            let a = comp[k];
            for (idx, &b) in nodes.iter().enumerate() {
                if !seen[idx] && m[a - 1][b - 1] != 0 {
                    seen[idx] = true;
                    comp.push(b);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Degrees of the finite Weyl group of a connected simply-laced diagram, or `None`
/// when the diagram is not of finite type.
pub fn component_degrees(data: &AffineCartanData, comp: &[usize]) -> Option<Vec<u32>> {
    let m = data.affine_cartan_matrix();
    let n = comp.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let adj = |a: usize, b: usize| m[a - 1][b - 1];
    let mut edges = 0usize;
    let mut deg = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let e = adj(comp[i], comp[j]);
                if e < -1 {
                    return None;
                }
                if e != 0 {
                    deg[i] += 1;
                    if i < j {
                        edges += 1;
                    }
                }
            }
        }
    }
    if edges != n - 1 {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&i| deg[i] >= 3).collect();
    let nn = n as u32;
    match branch.len() {
        0 => Some((2..=nn + 1).collect()),
        1 => {
            let b = branch[0];
            if deg[b] != 3 {
                return None;
            }
            // Arm lengths from the branch node.
            let mut arms = Vec::new();
            for j in 0..n {
                if j != b && adj(comp[b], comp[j]) != 0 {
                    let (mut prev, mut cur, mut len) = (b, j, 1);
                    loop {
                        let next = (0..n).find(|&k| k != prev && k != cur && adj(comp[cur], comp[k]) != 0);
                        match next {
                            Some(k) => {
                                prev = cur;
                                cur = k;
                                len += 1;
                            }
                            None => break,
                        }
                    }
                    arms.push(len);
                }
            }
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => {
                    let mut d: Vec<u32> = (1..nn).map(|k| 2 * k).collect();
                    d.push(nn);
                    d.sort_unstable();
                    Some(d)
                }
                (1, 2, 2) => Some(vec![2, 5, 6, 8, 9, 12]),
                (1, 2, 3) => Some(vec![2, 6, 8, 10, 12, 14, 18]),
                (1, 2, 4) => Some(vec![2, 8, 12, 14, 18, 20, 24, 30]),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Degrees of the parabolic subgroup generated by `nodes`, or `None` if it is infinite.
pub fn parabolic_degrees(data: &AffineCartanData, nodes: &[usize]) -> Option<Vec<u32>> {
    let mut all = Vec::new();
    for comp in components(data, nodes) {
        all.extend(component_degrees(data, &comp)?);
    }
    all.sort_unstable();
    Some(all)
}

/// `∏ (1 + t + … + t^{d−1})` as a coefficient vector in `t`.
pub fn poincare_from_degrees(degrees: &[u32]) -> Vec<u64> {
    let mut p = vec![1u64];
    for &d in degrees {
        let mut next = vec![0u64; p.len() + d as usize - 1];
        for (i, &c) in p.iter().enumerate() {
            for j in 0..d as usize {
                next[i + j] += c;
            }
        }
        p = next;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_types_are_recognized() {
        let cases = [
            ("A3", vec![2, 3, 4]),
            ("D4", vec![2, 4, 4, 6]),
            ("D5", vec![2, 4, 5, 6, 8]),
            ("E6", vec![2, 5, 6, 8, 9, 12]),
            ("E7", vec![2, 6, 8, 10, 12, 14, 18]),
            ("E8", vec![2, 8, 12, 14, 18, 20, 24, 30]),
        ];
        for (name, want) in cases {
            let d = AffineCartanData::from_name(name).unwrap();
            let fin: Vec<usize> = (1..=d.rank()).collect();
            assert_eq!(parabolic_degrees(&d, &fin), Some(want.clone()), "{name}");
            // the affine node together with all but one finite node is again finite
            let all: Vec<usize> = (1..=d.num_simple()).collect();
            assert_eq!(parabolic_degrees(&d, &all), None, "{name}");
        }
    }

    #[test]
    fn order_from_degrees() {
        let p = poincare_from_degrees(&[2, 5, 6, 8, 9, 12]);
        assert_eq!(p.iter().sum::<u64>(), 51840);
        assert_eq!(p.len(), 37);
        let e8 = poincare_from_degrees(&[2, 8, 12, 14, 18, 20, 24, 30]);
        assert_eq!(e8.iter().sum::<u64>(), 696_729_600);
    }

    #[test]
    fn affine_a1_pair_is_infinite() {
        let d = AffineCartanData::from_name("A1").unwrap();
        assert_eq!(parabolic_degrees(&d, &[1, 2]), None);
        assert_eq!(parabolic_degrees(&d, &[2]), Some(vec![2]));
    }
}
