use moulde::ari::identity::{ad_invpal, ad_pal};
use moulde::ari::{
    fundamental_identity_check, fundamental_identity_direct, ganit_bar, log_ari_bar, named_mould, tnc_mould, NamedMould,
};
use moulde::exact::rational::int;
use moulde::exact::{MultiPoly, RatFrac};
use moulde::mould::{
    circ_neutral, circ_neutral_star, in_ari_delta, is_alternal, is_push_invariant, is_senary_untwisted, ma, ma_neg,
    pari, swap, Alphabet, Mould,
};
use moulde::words::{nu_twist, NCPoly};

const D: usize = 4;

fn b3() -> NCPoly {
    NCPoly::parse("xxy - 2*xyx + yxx").unwrap()
}

fn sample_v(d: usize) -> Mould {
    let v = |r: usize, i: usize| MultiPoly::var(r, i);
    Mould::from_polys(
        Alphabet::V,
        [(1, v(1, 0).pow(2)), (2, &v(2, 0) * &v(2, 1).pow(3)), (3, v(3, 2)), (4, &v(4, 0) * &v(4, 3))],
    )
    .truncate(d)
}

#[test]
fn ganit_of_pic_and_poc_are_inverse() {
    let pic = named_mould(NamedMould::Pic, D).unwrap();
    let poc = named_mould(NamedMould::Poc, D).unwrap();
    let t = sample_v(D);
    assert_eq!(ganit_bar(&pic, &ganit_bar(&poc, &t).unwrap()).unwrap().first_difference(&t), None);
    assert_eq!(ganit_bar(&poc, &ganit_bar(&pic, &t).unwrap()).unwrap().first_difference(&t), None);
}

#[test]
fn poc_with_the_opposite_sign_is_not_an_inverse() {
    let pic = named_mould(NamedMould::Pic, D).unwrap();
    let mut flipped = named_mould(NamedMould::Poc, D).unwrap().neg_values();
    flipped.set(0, RatFrac::one(0));
    let t = sample_v(D);
    assert!(ganit_bar(&pic, &ganit_bar(&flipped, &t).unwrap()).unwrap().first_difference(&t).is_some());
}

#[test]
fn lopil_and_pil() {
    let lopil = named_mould(NamedMould::Lopil, D).unwrap();
    assert!(is_alternal(&lopil).holds);
    assert!(circ_neutral(&lopil).unwrap().holds);
    let pil = named_mould(NamedMould::Pil, D).unwrap();
    assert_eq!(log_ari_bar(&pil, D).unwrap(), lopil);
    assert!(is_alternal(&named_mould(NamedMould::Lopal, D).unwrap()).holds);
}

#[test]
fn ad_pal_inverts_ad_invpal() {
    let m = ma(&b3()).unwrap().truncate(D);
    let back = ad_pal(&ad_invpal(&m, D).unwrap(), D).unwrap();
    assert_eq!(back.first_difference(&m), None);
}

#[test]
fn direct_identity_on_a_push_invariant_mould() {
    for d in [3, 4] {
        let r = fundamental_identity_direct(&ma(&b3()).unwrap(), d).unwrap();
        assert!(r.hypothesis);
        assert!(r.holds, "depth {d}: first difference {:?}", r.first_difference);
    }
}

#[test]
fn rearranged_identity_on_the_twisted_b3() {
    let n = pari(&ma_neg(&nu_twist(&b3())).unwrap());
    let r = fundamental_identity_check(&n, D).unwrap();
    assert!(r.hypothesis);
    assert!(r.holds, "first difference {:?}", r.first_difference);
    assert_eq!(r.first_difference, None);
}

#[test]
fn ad_pal_image_satisfies_the_teru_relation() {
    let s = ad_pal(&ma(&b3()).unwrap().truncate(D), D).unwrap();
    assert!(is_senary_untwisted(&s).unwrap().holds);
}

#[test]
fn ganit_poc_sends_circ_constant_to_circ_neutral() {
    for n in 3..=7 {
        let poc = named_mould(NamedMould::Poc, n).unwrap();
        let g = ganit_bar(&poc, &pari(&tnc_mould(n, &int(1)))).unwrap();
        assert!(circ_neutral(&g).unwrap().holds, "n = {n}");
    }
}

#[test]
fn invpal_image_of_the_signed_form() {
    let b = ma_neg(&nu_twist(&b3())).unwrap();
    let xi = ad_invpal(&pari(&b).truncate(D), D).unwrap();
    assert!(is_push_invariant(&xi).unwrap().holds);
    assert!(is_alternal(&xi).holds);
    assert!(circ_neutral_star(&swap(&xi)).unwrap().holds);
    assert!(in_ari_delta(&xi).unwrap().holds);
}
