use std::f64::consts::{FRAC_PI_3, TAU};

use rand::Rng;

use super::sample::{self, Shape};
use super::{ClaimSpec, Suite, Trial, Unit};
use crate::centers::{self, BrocardKind, CatalogKind};
use crate::chains::{self, ThetaSchedule};
use crate::error::Result;
use crate::kernel::{directed_angle, reflect_over_line, second_intersection, DirectedAngle, Line, Point};
use crate::miquel::{self, Pedal, SpecialRole, Triad};
use crate::triangle::{triangle_contains, Containment, Correspondence, Triangle, Vertex};

use Unit::{Angle, Circumradius as Len};

pub(super) static REGISTRY: &[Suite] = &[
    Suite {
        name: "concurrency",
        summary: "the three Miquel circles of any triad meet in one point",
        default_trials: 1000,
        claims: &[ClaimSpec::below("miquel-residual", 1e-8, Len)],
        body: concurrency,
    },
    Suite {
        name: "angle-equations",
        summary: "vertex angle plus Miquel angle equals the angle the opposite side subtends at P",
        default_trials: 500,
        claims: &[
            ClaimSpec::below("miquel-point-is-p", 1e-8, Len),
            ClaimSpec::below("equation-at-a", 1e-9, Angle),
            ClaimSpec::below("equation-at-b", 1e-9, Angle),
            ClaimSpec::below("equation-at-c", 1e-9, Angle),
            ClaimSpec::below("family-angles", 1e-8, Angle),
            ClaimSpec::below("family-ratio", 1e-8, Unit::Relative),
        ],
        body: angle_equations,
    },
    Suite {
        name: "parity",
        summary: "P is inside its Miquel triangle exactly when it is inside the host",
        default_trials: 400,
        claims: &[ClaimSpec::none_fail("parity-agrees"), ClaimSpec::below("interior-ray-sum", 1e-9, Angle)],
        body: parity,
    },
    Suite {
        name: "sextet",
        summary: "Miquel triangle angles from the six vertex angles of P",
        default_trials: 500,
        claims: &[
            ClaimSpec::below("sextet-sums", 1e-9, Angle),
            ClaimSpec::below("predicted-vs-measured", 1e-8, Angle),
        ],
        body: sextet,
    },
    Suite {
        name: "inversion",
        summary: "points inverse in the circumcircle have similar pedal triangles",
        default_trials: 200,
        claims: &[
            ClaimSpec::below("same-labels", 1e-7, Angle),
            ClaimSpec::none_fail("orientation-reversed"),
        ],
        body: inversion,
    },
    Suite {
        name: "eleven-points",
        summary: "the eleven points whose Miquel triangles are similar to the host",
        default_trials: 50,
        claims: &[
            ClaimSpec::below("interior-similarity", 1e-7, Angle),
            ClaimSpec::below("exterior-similarity", 1e-7, Angle),
            ClaimSpec::none_fail("interior-inside-circumcircle"),
            ClaimSpec::above("pairwise-separation", 1e-6, Len),
        ],
        body: eleven_points,
    },
    Suite {
        name: "circumcenter-role",
        summary: "the circumcenter is the orthocenter of its Miquel triangle",
        default_trials: 100,
        claims: &[ClaimSpec::below("orthocenter-match", 1e-8, Len)],
        body: circumcenter_role,
    },
    Suite {
        name: "orthocenter-role",
        summary: "the orthocenter is the incenter (acute) or an excenter (obtuse) of its Miquel triangle",
        default_trials: 100,
        claims: &[ClaimSpec::below("in-excenter-match", 1e-8, Len)],
        body: orthocenter_role,
    },
    Suite {
        name: "in-excenter-role",
        summary: "the incenter and the excenters are circumcenters of their Miquel triangles",
        default_trials: 100,
        claims: &[ClaimSpec::below("circumcenter-match", 1e-8, Len)],
        body: in_excenter_role,
    },
    Suite {
        name: "brocard-role",
        summary: "Brocard points stay Brocard points of their Miquel triangles",
        default_trials: 100,
        claims: &[ClaimSpec::below("angle-condition", 1e-8, Angle), ClaimSpec::below("position", 1e-8, Len)],
        body: brocard_role,
    },
    Suite {
        name: "s-point-median",
        summary: "S-points become M-points on the median of the Miquel triangle",
        default_trials: 100,
        claims: &[
            ClaimSpec::below("on-median", 1e-7, Len),
            ClaimSpec::below("acute-reflection", 1e-7, Len),
            ClaimSpec::below("obtuse-circle", 1e-7, Len),
            ClaimSpec::below("m-point-match", 1e-7, Len),
        ],
        body: s_point_median,
    },
    Suite {
        name: "m-point-isosceles",
        summary: "M-points have isosceles Miquel triangles and lie on the base-incenter circle",
        default_trials: 100,
        claims: &[
            ClaimSpec::below("base-angles", 1e-8, Angle),
            ClaimSpec::below("on-base-incenter-circle", 1e-7, Len),
            ClaimSpec::none_fail("inside-iff-acute-vertex"),
        ],
        body: m_point_isosceles,
    },
    Suite {
        name: "isosceles-arc",
        summary: "points on the base-incenter arc of an isosceles triangle become S-points",
        default_trials: 100,
        claims: &[
            ClaimSpec::below("s-point-match", 1e-7, Len),
            ClaimSpec::below("view-angle", 1e-7, Angle),
            ClaimSpec::none_fail("detected-s-role"),
        ],
        body: isosceles_arc,
    },
    Suite {
        name: "isogonal-s-m",
        summary: "S-points and M-points are isogonal conjugates",
        default_trials: 200,
        claims: &[ClaimSpec::below("conjugate-match", 1e-8, Len)],
        body: isogonal_s_m,
    },
    Suite {
        name: "reflected-pairs",
        summary: "mirror images on the base-incenter circle of an isosceles triangle are isogonal conjugates",
        default_trials: 100,
        claims: &[ClaimSpec::below("isogonal-angles", 1e-8, Angle)],
        body: reflected_pairs,
    },
    Suite {
        name: "mod3",
        summary: "iterated Miquel triangles repeat their shape every three steps",
        default_trials: 50,
        claims: &[
            ClaimSpec::below("pedal-chain", 1e-6, Angle),
            ClaimSpec::below("rotated-chain", 1e-6, Angle),
            ClaimSpec::below("rotation-invariance", 1e-6, Angle),
        ],
        body: mod3,
    },
    Suite {
        name: "seed-similarity",
        summary: "which chain steps are similar to the seed for special points",
        default_trials: 50,
        claims: &[
            ClaimSpec::below("circumcenter-and-s-points", 1e-6, Angle),
            ClaimSpec::below("orthocenter-and-m-points", 1e-6, Angle),
            ClaimSpec::below("brocard-points", 1e-6, Angle),
        ],
        body: seed_similarity,
    },
    Suite {
        name: "role-cycles",
        summary: "roles of the fixed point cycle along the chain",
        default_trials: 50,
        claims: &[
            ClaimSpec::none_fail("o-h-l-cycle"),
            ClaimSpec::none_fail("s-m-q-cycle"),
            ClaimSpec::below("brocard-fixed", 1e-7, Angle),
        ],
        body: role_cycles,
    },
    Suite {
        name: "simson",
        summary: "pedal feet of circumcircle points are collinear",
        default_trials: 200,
        claims: &[ClaimSpec::below("collinearity", 1e-9, Len), ClaimSpec::none_fail("detected-as-line")],
        body: simson,
    },
];

const CHAIN_STEPS: usize = 9;

fn concurrency(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let params = [(); 3].map(|_| loop {
        let s: f64 = tr.rng.gen_range(-1.0..=2.0);
        if s.abs() > 0.02 && (1.0 - s).abs() > 0.02 {
            break s;
        }
    });
    tr.scene(&t, None);
    let triad = Triad::new(t, params[0], params[1], params[2])?;
    let m = miquel::miquel_point(&triad)?;
    tr.record("miquel-residual", m.residual / t.circumradius());
    Ok(())
}

fn angle_equations(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let p = sample::interior_point(&mut tr.rng, &t, 0.05);
    let theta = sample::theta(&mut tr.rng, FRAC_PI_3);
    tr.scene(&t, Some(p));
    let r = t.circumradius();
    let triad = miquel::family_member(&t, p, DirectedAngle::new(theta))?;
    tr.record("miquel-point-is-p", miquel::miquel_point(&triad)?.point.distance(p) / r);
    let res = miquel::verify_miquel_equations(&t, p, &triad)?;
    tr.record("equation-at-a", res[0]);
    tr.record("equation-at-b", res[1]);
    tr.record("equation-at-c", res[2]);
    let printed = miquel::printed_third_equation_residual(&t, p, &triad)?;
    if printed > 1e-6 {
        tr.tally("third equation as printed (A + Z = APB) fails");
    } else {
        tr.tally("third equation as printed (A + Z = APB) holds");
    }

    let member = triad.triangle()?;
    let pedal = miquel::pedal_triangle(&t, p)?;
    tr.record("family-angles", miquel::angle_mismatch(&pedal, &member, Correspondence::IDENTITY));
    let expected = 1.0 / theta.cos();
    let ratio_err = Vertex::ALL
        .iter()
        .map(|&v| (member.side(v) / pedal.side(v) - expected).abs() / expected)
        .fold(0.0, f64::max);
    tr.record("family-ratio", ratio_err);
    Ok(())
}

fn parity(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let p = match tr.index % 4 {
        0 | 2 => sample::interior_point(&mut tr.rng, &t, 0.01),
        1 => sample::exterior_point(&mut tr.rng, &t, false, 1e-3),
        _ => sample::exterior_point(&mut tr.rng, &t, true, 1e-3),
    };
    tr.scene(&t, Some(p));
    let rep = miquel::containment_parity(&t, p)?;
    if rep.host == Containment::OnBoundary || rep.miquel == Containment::OnBoundary {
        tr.tally("boundary case skipped");
        return Ok(());
    }
    let beyond = !t.circumcircle().contains_strictly(p);
    tr.tally(match (rep.host.is_inside(), beyond) {
        (true, _) => "inside host",
        (false, false) => "outside host, inside circumcircle",
        (false, true) => "outside circumcircle",
    });
    tr.expect("parity-agrees", rep.agree);
    if rep.host.is_inside() {
        tr.record("interior-ray-sum", (rep.ray_angle_sum - TAU).abs());
    }
    Ok(())
}

fn sextet(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let p = sample::circumdisk_point(&mut tr.rng, &t, 1.0, 0.01);
    tr.scene(&t, Some(p));
    let s = miquel::angle_sextet(&t, p)?;
    let sums = s.sums();
    let host = Vertex::ALL.map(|v| t.directed_angle_at(v));
    tr.record("sextet-sums", (0..3).map(|i| sums[i].distance(host[i])).fold(0.0, f64::max));
    let predicted = miquel::miquel_triangle_angles(&t, p)?.as_array();
    let measured = miquel::measured_angles(&miquel::pedal_triangle(&t, p)?);
    tr.record("predicted-vs-measured", (0..3).map(|i| predicted[i].distance(measured[i])).fold(0.0, f64::max));
    Ok(())
}

fn inversion(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let r = t.circumradius();
    let o = centers::circumcenter(&t);
    let (p, q) = loop {
        let p = sample::circumdisk_point(&mut tr.rng, &t, 0.95, 0.01);
        if p.distance(o) < 0.05 * r {
            continue;
        }
        let q = centers::inverse_in_circumcircle(&t, p)?;
        if t.side_line_distance(q) >= 0.01 * r {
            break (p, q);
        }
    };
    tr.scene(&t, Some(p));
    let tp = miquel::pedal_triangle(&t, p)?;
    let tq = miquel::pedal_triangle(&t, q)?;
    tr.record("same-labels", miquel::angle_mismatch(&tp, &tq, Correspondence::IDENTITY));
    tr.expect("orientation-reversed", tp.orientation() != tq.orientation());
    Ok(())
}

fn orientation_label(t: &Triangle, xyz: &Triangle, perm: Correspondence) -> &'static str {
    match miquel::classify_similarity(t, xyz, 1e-6).into_iter().find(|c| c.permutation == perm) {
        Some(c) if c.orientation == miquel::Orientation::Direct => "direct",
        Some(_) => "inverse",
        None => "not similar",
    }
}

fn eleven_points(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::SEPARATED);
    tr.scene(&t, None);
    let r = t.circumradius();
    let catalog = centers::eleven_point_catalog(&t)?;
    for entry in &catalog {
        tr.scene(&t, Some(entry.location));
        if t.side_line_distance(entry.location) <= 1e-9 * r {
            tr.tally(format!("{} on a side line", entry.kind.label()));
        }
        let xyz = miquel::feet_triangle(&t, entry.location)?;
        let mismatch = miquel::angle_mismatch(&t, &xyz, entry.expected_similarity);
        let label = entry.kind.label();
        match entry.kind {
            CatalogKind::Center(_) => {
                tr.record("interior-similarity", mismatch);
                tr.expect("interior-inside-circumcircle", t.circumcircle().contains_strictly(entry.location));
            }
            CatalogKind::InverseOf(_) => tr.record("exterior-similarity", mismatch),
        }
        let orient = orientation_label(&t, &xyz, entry.expected_similarity);
        tr.tally(format!("{label} {} {orient}", entry.expected_similarity));
    }
    tr.scene(&t, None);
    let mut closest = f64::INFINITY;
    for (i, a) in catalog.iter().enumerate() {
        for b in &catalog[i + 1..] {
            closest = closest.min(a.location.distance(b.location) / r);
        }
    }
    tr.record("pairwise-separation", closest);
    Ok(())
}

fn circumcenter_role(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let p = centers::circumcenter(&t);
    tr.scene(&t, Some(p));
    let xyz = miquel::pedal_triangle(&t, p)?;
    tr.record("orthocenter-match", centers::orthocenter(&xyz).distance(p) / t.circumradius());
    Ok(())
}

fn obtuse_vertex(t: &Triangle) -> Option<Vertex> {
    Vertex::ALL.into_iter().find(|&v| t.is_obtuse_at(v))
}

fn orthocenter_role(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let p = centers::orthocenter(&t);
    tr.scene(&t, Some(p));
    let xyz = miquel::pedal_triangle(&t, p)?;
    let expected = match obtuse_vertex(&t) {
        None => {
            tr.tally("acute host: incenter");
            centers::incenter(&xyz)
        }
        Some(v) => {
            tr.tally("obtuse host: excenter opposite the obtuse vertex's image");
            centers::excenter(&xyz, v)
        }
    };
    tr.record("in-excenter-match", expected.distance(p) / t.circumradius());
    Ok(())
}

fn in_excenter_role(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let points = [centers::incenter(&t)].into_iter().chain(Vertex::ALL.map(|v| centers::excenter(&t, v)));
    for p in points {
        tr.scene(&t, Some(p));
        let xyz = miquel::pedal_triangle(&t, p)?;
        tr.record("circumcenter-match", centers::circumcenter(&xyz).distance(p) / t.circumradius());
    }
    Ok(())
}

fn spread(angles: [DirectedAngle; 3]) -> f64 {
    angles[0].distance(angles[1]).max(angles[1].distance(angles[2])).max(angles[2].distance(angles[0]))
}

/// Deviation from the Brocard angle condition of the given kind.
fn brocard_spread(t: &Triangle, p: Point, kind: BrocardKind) -> Result<f64> {
    let s = miquel::angle_sextet(t, p)?;
    Ok(match kind {
        BrocardKind::First => spread([s.alpha2, s.beta2, s.gamma2]),
        BrocardKind::Second => spread([s.alpha1, s.beta1, s.gamma1]),
    })
}

fn brocard_role(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    for kind in [BrocardKind::First, BrocardKind::Second] {
        let p = centers::brocard_point(&t, kind)?;
        tr.scene(&t, Some(p));
        let xyz = miquel::pedal_triangle(&t, p)?;
        tr.record("angle-condition", brocard_spread(&xyz, p, kind)?);
        tr.record("position", centers::brocard_point(&xyz, kind)?.distance(p) / t.circumradius());
    }
    Ok(())
}

fn s_point_median(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let r = t.circumradius();
    let tol = t.tolerance();
    for v in Vertex::ALL {
        let p = centers::s_point(&t, v)?;
        tr.scene(&t, Some(p));
        let xyz = miquel::pedal_triangle(&t, p)?;
        let x = xyz.vertex(v);
        let e = xyz.vertex(v.next()).midpoint(xyz.vertex(v.prev()));
        let median = Line::through(x, e)?;
        tr.record("on-median", median.distance(p) / r);
        if t.is_obtuse_at(v) {
            tr.tally("obtuse at the vertex");
            let f = e * 2.0 - x;
            let circle = crate::kernel::circumcircle(f, xyz.vertex(v.next()), xyz.vertex(v.prev()), tol)?;
            tr.record("obtuse-circle", circle.offset(p).abs() / r);
        } else {
            tr.tally("acute at the vertex");
            let f = second_intersection(&median, &xyz.circumcircle(), x, tol)?.point;
            tr.record("acute-reflection", (e.distance(p) - e.distance(f)).abs() / r);
        }
        tr.record("m-point-match", centers::m_point(&xyz, v)?.distance(p) / r);
    }
    Ok(())
}

fn m_point_isosceles(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let r = t.circumradius();
    for v in Vertex::ALL {
        let p = centers::m_point(&t, v)?;
        tr.scene(&t, Some(p));
        let xyz = miquel::pedal_triangle(&t, p)?;
        // directed: at an obtuse vertex the interior base angles are π − ∠A
        let host = t.directed_angle_at(v);
        let base = xyz.directed_angle_at(v.next()).distance(host).max(xyz.directed_angle_at(v.prev()).distance(host));
        tr.record("base-angles", base);
        tr.record("on-base-incenter-circle", miquel::base_incircle_arc(&xyz, v)?.offset(p).abs() / r);
        let inside = triangle_contains(&xyz, p).is_inside();
        let acute = !t.is_obtuse_at(v);
        tr.expect("inside-iff-acute-vertex", inside == acute);
        let whole = if t.is_acute() { "acute host" } else { "obtuse host" };
        let at = if acute { "acute vertex" } else { "obtuse vertex" };
        let pos = if inside { "inside" } else { "outside" };
        tr.tally(format!("{whole}, {at}: {pos}"));
        // same side of YZ as the incenter of XYZ, i.e. on the arc through it
        let yz = xyz.side_line(v);
        let same_side = yz.signed_distance(p) * yz.signed_distance(centers::incenter(&xyz)) > 0.0;
        tr.tally(format!("{at}: {}", if same_side { "on the arc through L" } else { "on the arc away from L" }));
    }
    Ok(())
}

/// Point on the arc of circle `(B, C, L)` from `B` to `C` through `L`, at
/// fraction `s` of its length.
fn base_arc_point(t: &Triangle, s: f64) -> Result<Point> {
    let c = miquel::base_incircle_arc(t, Vertex::A)?;
    let ang = |p: Point| (p - c.center).y.atan2((p - c.center).x);
    let from = ang(t.b());
    let ccw = |p: Point| (ang(p) - from).rem_euclid(TAU);
    let to_c = ccw(t.c());
    let span = if ccw(centers::incenter(t)) < to_c { to_c } else { to_c - TAU };
    let phi = from + s * span;
    Ok(c.center + Point::new(phi.cos(), phi.sin()) * c.radius)
}

fn isosceles_arc(tr: &mut Trial) -> Result<()> {
    let t = sample::isosceles(&mut tr.rng);
    let r = t.circumradius();
    let l = centers::incenter(&t);
    let p = loop {
        let p = base_arc_point(&t, tr.rng.gen_range(0.05..0.95))?;
        if p.distance(l) > 0.05 * r {
            break p;
        }
    };
    tr.scene(&t, Some(p));
    let xyz = miquel::pedal_triangle(&t, p)?;
    tr.record("s-point-match", centers::s_point(&xyz, Vertex::A)?.distance(p) / r);
    let view = directed_angle(xyz.b(), p, xyz.c(), xyz.tolerance())?;
    tr.record("view-angle", view.distance(xyz.directed_angle_at(Vertex::A) * 2.0));
    let role = miquel::detect_special_role(&xyz, p, 1e-6);
    tr.expect("detected-s-role", role == SpecialRole::SRole(Vertex::A));
    Ok(())
}

fn isogonal_s_m(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    for v in Vertex::ALL {
        let s = centers::s_point(&t, v)?;
        tr.scene(&t, Some(s));
        let m = centers::m_point(&t, v)?;
        tr.record("conjugate-match", centers::isogonal_conjugate(&t, s)?.distance(m) / t.circumradius());
        if t.is_obtuse_at(v) {
            tr.tally(format!("obtuse at {v}"));
        }
    }
    Ok(())
}

fn reflected_pairs(tr: &mut Trial) -> Result<()> {
    let t = sample::isosceles(&mut tr.rng);
    let r = t.circumradius();
    let circle = miquel::base_incircle_arc(&t, Vertex::A)?;
    let q = loop {
        let phi = tr.rng.gen_range(0.0..TAU);
        let q = circle.center + Point::new(phi.cos(), phi.sin()) * circle.radius;
        if t.side_line_distance(q) > 0.01 * r && q.distance(t.b()).min(q.distance(t.c())) > 0.05 * r {
            break q;
        }
    };
    tr.scene(&t, Some(q));
    let axis = Line::through(t.a(), t.b().midpoint(t.c()))?;
    let reflected = reflect_over_line(&axis, q);
    let res = centers::isogonal_residuals(&t, q, reflected)?;
    tr.record("isogonal-angles", res.into_iter().fold(0.0, f64::max));
    Ok(())
}

fn random_schedule<R: Rng>(rng: &mut R, k: usize) -> ThetaSchedule {
    ThetaSchedule::PerStep((0..k).map(|_| DirectedAngle::new(sample::theta(rng, FRAC_PI_3))).collect())
}

fn mod3(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::CHAIN);
    let generic = sample::interior_point(&mut tr.rng, &t, 0.1);
    let points = [
        centers::circumcenter(&t),
        centers::orthocenter(&t),
        centers::incenter(&t),
        centers::brocard_point(&t, BrocardKind::First)?,
        generic,
    ];
    for p in points {
        tr.scene(&t, Some(p));
        let pedal = chains::iterate_chain(&t, p, CHAIN_STEPS, &ThetaSchedule::Pedal)?;
        let schedule = random_schedule(&mut tr.rng, CHAIN_STEPS);
        let rotated = chains::iterate_chain(&t, p, CHAIN_STEPS, &schedule)?;
        let a = chains::check_mod3_similarity(&pedal, 1e-6);
        let b = chains::check_mod3_similarity(&rotated, 1e-6);
        tr.record("pedal-chain", a.max_residual);
        tr.record("rotated-chain", b.max_residual);
        let drift = pedal
            .triangles
            .iter()
            .zip(&rotated.triangles)
            .map(|(x, y)| miquel::angle_mismatch(x, y, Correspondence::IDENTITY))
            .fold(0.0, f64::max);
        tr.record("rotation-invariance", drift);
        if !a.accidental.is_empty() {
            tr.tally("pedal chain with a cross-class similarity");
        }
    }
    Ok(())
}

fn seed_similarity(tr: &mut Trial) -> Result<()> {
    const STEPS: usize = 6;
    let t = sample::triangle(&mut tr.rng, &Shape::CHAIN);
    let check = |tr: &mut Trial, p: Point, claim: &'static str, classes: &[usize]| -> Result<()> {
        tr.scene(&t, Some(p));
        let rec = chains::iterate_chain(&t, p, STEPS, &ThetaSchedule::Pedal)?;
        for (k, r) in chains::similarity_to_seed(&rec).into_iter().enumerate() {
            if classes.contains(&(k % 3)) {
                tr.record(claim, r);
            } else if r < 1e-6 {
                tr.tally(format!("{claim}: step {k} unexpectedly similar to the seed"));
            }
        }
        Ok(())
    };
    check(tr, centers::circumcenter(&t), "circumcenter-and-s-points", &[0, 1])?;
    check(tr, centers::orthocenter(&t), "orthocenter-and-m-points", &[2, 0])?;
    for v in Vertex::ALL {
        check(tr, centers::s_point(&t, v)?, "circumcenter-and-s-points", &[0, 1])?;
        check(tr, centers::m_point(&t, v)?, "orthocenter-and-m-points", &[2, 0])?;
    }
    for kind in [BrocardKind::First, BrocardKind::Second] {
        check(tr, centers::brocard_point(&t, kind)?, "brocard-points", &[0, 1, 2])?;
    }
    Ok(())
}

fn role_cycles(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::CHAIN);
    let o = centers::circumcenter(&t);
    tr.scene(&t, Some(o));
    let rec = chains::iterate_chain(&t, o, CHAIN_STEPS, &ThetaSchedule::Pedal)?;
    let cycle = chains::detect_role_cycle(&rec);
    let ok = cycle.follows(&[
        |r| *r == SpecialRole::Circumcenter,
        |r| *r == SpecialRole::Orthocenter,
        |r| r.is_in_or_excenter(),
    ]);
    tr.expect("o-h-l-cycle", ok);
    if let Some(third) = cycle.0.get(2) {
        tr.tally(format!("circumcenter chain, step 2: {}", if *third == SpecialRole::Incenter { "incenter" } else { "excenter" }));
    }

    for v in Vertex::ALL {
        let s = centers::s_point(&t, v)?;
        tr.scene(&t, Some(s));
        let rec = chains::iterate_chain(&t, s, CHAIN_STEPS, &ThetaSchedule::Pedal)?;
        let expected = [SpecialRole::SRole(v), SpecialRole::MRole(v), SpecialRole::QRole(v)];
        let ok = rec.roles.iter().enumerate().all(|(k, r)| *r == expected[k % 3]);
        tr.expect("s-m-q-cycle", ok);
        if !ok {
            tr.tally(format!("s-point chain roles: {}", rec.roles.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" ")));
        }
    }

    for kind in [BrocardKind::First, BrocardKind::Second] {
        let p = centers::brocard_point(&t, kind)?;
        tr.scene(&t, Some(p));
        let schedule = random_schedule(&mut tr.rng, CHAIN_STEPS);
        let rec = chains::iterate_chain(&t, p, CHAIN_STEPS, &schedule)?;
        for tri in &rec.triangles {
            tr.record("brocard-fixed", brocard_spread(tri, p, kind)?);
        }
    }
    Ok(())
}

fn simson(tr: &mut Trial) -> Result<()> {
    let t = sample::triangle(&mut tr.rng, &Shape::GENERIC);
    let r = t.circumradius();
    let p = loop {
        let p = sample::circumcircle_point(&mut tr.rng, &t);
        if t.side_line_distance(p) > 1e-3 * r {
            break p;
        }
    };
    tr.scene(&t, Some(p));
    match miquel::pedal_triad(&t, p)? {
        Pedal::Simson(line) => {
            tr.expect("detected-as-line", true);
            tr.record("collinearity", line.deviation() / r);
        }
        Pedal::Triad(_) => tr.expect("detected-as-line", false),
    }
    Ok(())
}
