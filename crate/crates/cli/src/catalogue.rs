//! Published values of `θ(a,b,d)` for `d = 4, 6, 8`, kept verbatim so the
//! `hilbert` report can compare them with what counting gives.

use gt_core::hilbert::SurfaceProfile;

/// The listed `θ`, or `None` outside `d ∈ {4, 6, 8}`.
pub fn listed_theta(a: u32, b: u32, d: u32) -> Option<u32> {
    match d {
        4 => Some(4),
        6 => Some(if matches!((a, b), (1, 2) | (1, 5) | (4, 5)) {
            4
        } else {
            5
        }),
        8 => Some(
            if matches!((a, b), (1, 4) | (1, 5) | (3, 4) | (3, 7)) || a == 4 {
                5
            } else {
                4
            },
        ),
        _ => None,
    }
}

/// A note when the listed value differs from the counted `θ`.
pub fn note(profile: &SurfaceProfile) -> Option<String> {
    let p = &profile.params;
    let listed = listed_theta(p.a, p.b, p.d)?;
    if i64::from(listed) == profile.theta_counted {
        return None;
    }
    let parity = if (p.d + listed) % 2 == 1 {
        format!(
            ", and θ = {listed} would make μ_d = (d+θ+2)/2 = {}/2 non-integral",
            p.d + listed + 2
        )
    } else {
        String::new()
    };
    Some(format!(
        "reference catalogue lists θ({},{},{}) = {listed}; counting gives θ = {} (μ_d = {}){parity}",
        p.a, p.b, p.d, profile.theta_counted, profile.mu_d_counted
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gt_core::hilbert::surface_profile;
    use gt_core::invariants::surface_triples;

    #[test]
    fn listed_five_is_exactly_counted_six() {
        for (a, b, d) in surface_triples(4, 8) {
            let Some(listed) = listed_theta(a, b, d) else {
                continue;
            };
            let p = surface_profile(a, b, d).unwrap();
            if listed == 5 {
                assert_eq!(p.theta_counted, 6, "({a},{b},{d})");
                assert!(note(&p).is_some());
            } else {
                assert_eq!(i64::from(listed), p.theta_counted, "({a},{b},{d})");
                assert!(note(&p).is_none());
            }
        }
    }

    #[test]
    fn note_text() {
        let n = note(&surface_profile(1, 3, 6).unwrap()).unwrap();
        assert!(n.contains("θ(1,3,6) = 5"));
        assert!(n.contains("θ = 6 (μ_d = 7)"));
        assert!(n.contains("13/2"));
    }
}
