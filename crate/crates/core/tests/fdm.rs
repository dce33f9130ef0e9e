mod common;

use std::f64::consts::PI;

use common::*;
use fqt_core::fdm::{
    decompose, plan_bands, remove_bands, separate_bands, tfe, trend, zero_phase_filter, BandPlan,
    BandStrategy, Decomposition, Route,
};
use fqt_core::instfreq::DiffScheme;
use fqt_core::transforms::{build_matrix, fast_dct2, TransformVariant};
use fqt_core::{Error, Signal};
use proptest::prelude::*;

fn sig(v: Vec<f64>) -> Signal {
    Signal::from_samples(v).unwrap()
}

fn bin(k: usize, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (PI * k as f64 * (2 * i + 1) as f64 / (2 * n) as f64).cos())
        .collect()
}

fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn energy(a: &[f64]) -> f64 {
    dot(a, a)
}

fn check_invariants(x: &[f64], d: &Decomposition) {
    let scale = max_abs(x);
    assert!(max_abs_diff(&d.reconstruct(), x) < 1e-10 * scale, "completeness");
    for i in 0..d.band_count() {
        for j in i + 1..d.band_count() {
            let (a, b) = (&d.fibfs[i], &d.fibfs[j]);
            let denom = norm(a) * norm(b);
            if denom > 0.0 {
                assert!(dot(a, b).abs() / denom < 1e-10, "bands {i},{j}");
            }
        }
    }
    let centred: Vec<f64> = x.iter().map(|v| v - d.dc).collect();
    let parts: f64 = d.fibfs.iter().map(|b| energy(b)).sum();
    let total = energy(&centred);
    assert!((total - parts).abs() <= 1e-9 * total, "energy partition");
}

#[test]
fn plan_examples() {
    let flat = vec![1.0; 17];
    assert_eq!(plan_bands(&flat, BandStrategy::Equal, 4).unwrap().edges(), &[0, 4, 8, 12, 16]);
    assert_eq!(plan_bands(&flat, BandStrategy::Dyadic, 4).unwrap().edges(), &[0, 2, 4, 8, 16]);
    let mut x = vec![0.0; 17];
    x[1] = 1.0;
    x[2] = 1.0;
    let p = plan_bands(&x, BandStrategy::EqualEnergy, 2).unwrap();
    assert_eq!(p.edges(), &[0, 1, 16]);
    assert_eq!(p.band(1), 1..=1);
    assert_eq!(p.band(2), 2..=16);
}

#[test]
fn plan_errors() {
    let flat = vec![1.0; 5];
    assert!(matches!(plan_bands(&flat, BandStrategy::Equal, 5), Err(Error::Size(_))));
    assert!(plan_bands(&flat, BandStrategy::Equal, 0).is_err());
    let mut dc_only = vec![0.0; 16];
    dc_only[0] = 3.0;
    assert!(matches!(
        plan_bands(&dc_only, BandStrategy::EqualEnergy, 3),
        Err(Error::Degenerate(_))
    ));
    assert!(BandPlan::from_edges(vec![0, 5, 5, 9], 10).is_err());
    assert!(BandPlan::from_edges(vec![0, 5, 8], 10).is_err());
    assert!(BandPlan::from_edges(vec![1, 9], 10).is_err());
    let plan = BandPlan::from_edges(vec![0, 3, 9], 10).unwrap();
    assert!(decompose(&sig(vec![0.0; 11]), &plan, Route::Fsas).is_err());
}

#[test]
fn equal_bands_differ_by_at_most_one() {
    for n in [10, 33, 100, 257] {
        for m in 1..9 {
            let p = plan_bands(&vec![1.0; n], BandStrategy::Equal, m).unwrap();
            let widths: Vec<usize> = (1..=m).map(|i| p.band(i).count()).collect();
            let (lo, hi) = (widths.iter().min().unwrap(), widths.iter().max().unwrap());
            assert!(hi - lo <= 1, "n={n} m={m} {widths:?}");
        }
    }
}

#[test]
fn equal_energy_bands_within_one_quantum() {
    let mut r = rng(30);
    for _ in 0..20 {
        let x = random_vec(&mut r, 200);
        let c = fast_dct2(&x).unwrap();
        for m in [2, 3, 5, 8] {
            let p = plan_bands(&c, BandStrategy::EqualEnergy, m).unwrap();
            let total: f64 = c[1..].iter().map(|v| v * v).sum();
            let quantum = c[1..].iter().map(|v| v * v).fold(0.0, f64::max);
            for i in 1..m {
                let e: f64 = p.band(i).map(|k| c[k] * c[k]).sum();
                assert!((e - total / m as f64).abs() <= quantum + 1e-12, "band {i} of {m}");
            }
        }
    }
}

#[test]
fn single_bin_lands_in_its_band() {
    let n = 64;
    let x = bin(5, n);
    let plan = BandPlan::from_edges(vec![0, 3, 10, 63], n).unwrap();
    let d = decompose(&sig(x.clone()), &plan, Route::Fsas).unwrap();
    assert!(max_abs_diff(&d.fibfs[1], &x) < 1e-12);
    assert!(max_abs(&d.fibfs[0]) < 1e-12 && max_abs(&d.fibfs[2]) < 1e-12);
}

#[test]
fn two_tones_separate_into_equal_bands() {
    let n = 64;
    let (a, b) = (bin(3, n), bin(40, n));
    let x = add(&a, &b);
    let plan = plan_bands(&fast_dct2(&x).unwrap(), BandStrategy::Equal, 2).unwrap();
    let d = decompose(&sig(x), &plan, Route::Gas).unwrap();
    assert!(max_abs_diff(&d.fibfs[0], &a) < 1e-10);
    assert!(max_abs_diff(&d.fibfs[1], &b) < 1e-10);
}

#[test]
fn fibf_matches_dense_masked_synthesis() {
    let n = 40;
    let x = random_vec(&mut rng(31), n);
    let c2 = build_matrix(TransformVariant::dct(2).unwrap(), n).unwrap();
    let s2 = build_matrix(TransformVariant::aux_sine(2).unwrap(), n).unwrap();
    let coeffs = c2.forward(&x).unwrap();
    let plan = BandPlan::from_edges(vec![0, 7, 20, 39], n).unwrap();
    let d = decompose(&sig(x), &plan, Route::Fsas).unwrap();
    for band in 1..=3 {
        let masked: Vec<f64> = plan.mask(band).iter().zip(&coeffs).map(|(w, c)| w * c).collect();
        let re = c2.inverse(&masked).unwrap();
        let im = s2.synthesize(&masked[1..], 1);
        assert!(max_abs_diff(&d.fibfs[band - 1], &re) < 1e-12);
        assert!(max_abs_diff(d.afibfs[band - 1].imag(), &im) < 1e-12);
    }
}

#[test]
fn invariants_for_all_strategies_and_routes() {
    let mut r = rng(32);
    for n in [16, 63, 256] {
        let x = random_vec(&mut r, n);
        let c = fast_dct2(&x).unwrap();
        for strategy in [BandStrategy::Equal, BandStrategy::Dyadic, BandStrategy::EqualEnergy] {
            let plan = plan_bands(&c, strategy, 4).unwrap();
            for route in [Route::Fsas, Route::Gas] {
                check_invariants(&x, &decompose(&sig(x.clone()), &plan, route).unwrap());
            }
        }
    }
}

#[test]
fn routes_share_real_parts_bit_for_bit() {
    let x = random_vec(&mut rng(33), 300);
    let plan = plan_bands(&fast_dct2(&x).unwrap(), BandStrategy::Dyadic, 5).unwrap();
    let f = decompose(&sig(x.clone()), &plan, Route::Fsas).unwrap();
    let g = decompose(&sig(x), &plan, Route::Gas).unwrap();
    assert_eq!(f.fibfs, g.fibfs);
    for (a, b) in f.afibfs.iter().zip(&g.afibfs) {
        assert_eq!(a.real(), b.real());
    }
}

#[test]
fn symmetric_input_gives_symmetric_bands() {
    let n = 101;
    let half = random_vec(&mut rng(34), n);
    let x: Vec<f64> = (0..n).map(|i| half[i] + half[n - 1 - i]).collect();
    let plan = plan_bands(&fast_dct2(&x).unwrap(), BandStrategy::Equal, 6).unwrap();
    let d = decompose(&sig(x), &plan, Route::Fsas).unwrap();
    for band in &d.fibfs {
        for i in 0..n {
            assert!((band[i] - band[n - 1 - i]).abs() < 1e-10);
        }
    }
}

#[test]
fn single_bin_tfe_reads_two_and_a_half_hz() {
    let (n, fs) = (64, 64.0);
    let x = Signal::new(bin(5, n), fs).unwrap();
    let plan = plan_bands(&fast_dct2(x.samples()).unwrap(), BandStrategy::Equal, 3).unwrap();
    let d = decompose(&x, &plan, Route::Fsas).unwrap();
    let grid = tfe(&d, DiffScheme::Ffd).unwrap();
    assert_eq!(grid.points.len(), n * 3);
    let band = plan.band_of(5).unwrap();
    let live: Vec<_> = grid.points.iter().filter(|p| p.band == band).collect();
    assert_eq!(live.len(), n);
    for p in &live {
        assert!((p.freq_hz - 2.5).abs() < 1e-7);
        assert!((p.energy - 1.0).abs() < 1e-10);
    }
    for p in grid.ridge().into_iter().map(Option::unwrap) {
        assert_eq!(p.band, band);
    }
    for p in &grid.points {
        assert!(p.freq_hz >= 0.0 && p.freq_hz <= fs / 2.0 && p.energy >= 0.0);
    }
}

#[test]
fn zero_signal_gives_zero_energy_grid() {
    let x = sig(vec![0.0; 32]);
    let plan = plan_bands(&[0.0; 32], BandStrategy::Dyadic, 3).unwrap();
    let grid = tfe(&decompose(&x, &plan, Route::Fsas).unwrap(), DiffScheme::Cfd).unwrap();
    assert!(grid.points.iter().all(|p| p.energy == 0.0));
    assert!(grid.ridge().iter().all(Option::is_none));
}

#[test]
fn remove_nothing_is_identity() {
    let x = random_vec(&mut rng(35), 90);
    let plan = plan_bands(&fast_dct2(&x).unwrap(), BandStrategy::Equal, 4).unwrap();
    let out = remove_bands(&sig(x.clone()), &plan, &[], false).unwrap();
    assert!(max_abs_diff(out.samples(), &x) < 1e-10);
}

#[test]
fn remove_everything_is_zero() {
    let x = random_vec(&mut rng(36), 90);
    let plan = plan_bands(&fast_dct2(&x).unwrap(), BandStrategy::Equal, 4).unwrap();
    let out = remove_bands(&sig(x), &plan, &[1, 2, 3, 4], true).unwrap();
    assert!(max_abs(out.samples()) < 1e-12);
}

#[test]
fn remove_bands_rejects_bad_index() {
    let x = sig(vec![1.0; 20]);
    let plan = BandPlan::from_edges(vec![0, 10, 19], 20).unwrap();
    assert!(matches!(remove_bands(&x, &plan, &[3], false), Err(Error::Domain(_))));
    assert!(remove_bands(&x, &plan, &[0], false).is_err());
}

#[test]
fn drift_and_tone_removal_matches_direct_zeroing() {
    let (fs, n) = (360.0, 3600);
    let t = |i: usize| i as f64 / fs;
    let nuisance: Vec<f64> = (0..n)
        .map(|i| (2.0 * PI * 0.3 * t(i) + 0.4).cos() + 0.5 * (2.0 * PI * 50.0 * t(i)).sin())
        .collect();
    // Bin k sits at k·fs/(2N) = k/20 Hz.
    let plan = BandPlan::from_edges(vec![0, 10, 979, 1020, n - 1], n).unwrap();
    let out = remove_bands(&Signal::new(nuisance.clone(), fs).unwrap(), &plan, &[1, 3], true).unwrap();

    let mut coeffs = dct2_direct(&nuisance);
    for k in (0..=10).chain(980..=1020) {
        coeffs[k] = 0.0;
    }
    let c2 = build_matrix(TransformVariant::dct(2).unwrap(), n).unwrap();
    let oracle = c2.inverse(&coeffs).unwrap();
    assert!(max_abs_diff(out.samples(), &oracle) < 1e-9);
}

#[test]
fn on_grid_drift_and_tone_are_attenuated_forty_db() {
    let (fs, n) = (360.0, 3600);
    // Half-sample offset puts 0.3 Hz and 50 Hz on DCT-2 bins 6 and 1000.
    let t = |i: usize| (i as f64 + 0.5) / fs;
    let drift: Vec<f64> = (0..n).map(|i| (2.0 * PI * 0.3 * t(i)).cos()).collect();
    let tone: Vec<f64> = (0..n).map(|i| 0.5 * (2.0 * PI * 50.0 * t(i)).cos()).collect();
    let clean: Vec<f64> = (0..n).map(|i| (2.0 * PI * 7.3 * i as f64 / fs).sin()).collect();
    let nuisance = add(&drift, &tone);
    let x = add(&clean, &nuisance);
    let plan = BandPlan::from_edges(vec![0, 10, 979, 1020, n - 1], n).unwrap();
    let out = remove_bands(&Signal::new(x, fs).unwrap(), &plan, &[1, 3], false).unwrap();
    let kept = remove_bands(&Signal::new(clean.clone(), fs).unwrap(), &plan, &[1, 3], false).unwrap();
    let residual: Vec<f64> = out.samples().iter().zip(kept.samples()).map(|(a, b)| a - b).collect();
    let attenuation = 10.0 * (energy(&nuisance) / energy(&residual).max(1e-300)).log10();
    assert!(attenuation >= 40.0, "{attenuation:.1} dB");
}

#[test]
fn separate_bands_keeps_what_it_removes() {
    let x = random_vec(&mut rng(37), 120);
    let plan = plan_bands(&fast_dct2(&x).unwrap(), BandStrategy::Dyadic, 4).unwrap();
    let r = separate_bands(&sig(x.clone()), &plan, &[4, 2], true).unwrap();
    assert_eq!(r.removed.iter().map(|(b, _)| *b).collect::<Vec<_>>(), vec![2, 4]);
    let mut total = r.cleaned.samples().to_vec();
    for (_, part) in &r.removed {
        total = add(&total, part);
    }
    let mean = r.dc.unwrap();
    assert!((mean - x.iter().sum::<f64>() / x.len() as f64).abs() < 1e-12);
    total.iter_mut().for_each(|v| *v += mean);
    assert!(max_abs_diff(&total, &x) < 1e-10);
}

#[test]
fn trend_splits_by_bin_period() {
    let n = 148;
    let slow: Vec<f64> = bin(1, n).iter().map(|v| 2.0 + 3.0 * v).collect();
    let fast = bin(40, n);
    let x = add(&slow, &fast);
    let (tr, var) = trend(&sig(x.clone()), 74.0).unwrap();
    assert!(max_abs_diff(tr.samples(), &slow) < 1e-10);
    assert!(max_abs_diff(var.samples(), &fast) < 1e-10);
    for ((t, v), xi) in tr.samples().iter().zip(var.samples()).zip(&x) {
        assert!((t + v - xi).abs() <= 4.0 * f64::EPSILON * xi.abs().max(1.0));
    }
}

#[test]
fn trend_above_two_n_keeps_only_mean() {
    let x = random_vec(&mut rng(38), 50);
    let (tr, _) = trend(&sig(x.clone()), 101.0).unwrap();
    let mean = x.iter().sum::<f64>() / 50.0;
    assert!(tr.samples().iter().all(|v| (v - mean).abs() < 1e-12));
    assert!(matches!(trend(&sig(x.clone()), 2.0), Err(Error::Domain(_))));
    assert!(trend(&sig(x), f64::NAN).is_err());
}

#[test]
fn soft_weights_are_accepted() {
    let x = random_vec(&mut rng(39), 64);
    let w: Vec<f64> = (0..64).map(|k| (-(k as f64 / 10.0).powi(2)).exp()).collect();
    let y = zero_phase_filter(&sig(x.clone()), &w).unwrap();
    let c = dct2_direct(&x);
    let want: Vec<f64> = c.iter().zip(&w).map(|(a, b)| a * b).collect();
    assert!(max_abs_diff(&dct2_direct(y.samples()), &want) < 1e-10);
    assert!(zero_phase_filter(&sig(x.clone()), &vec![-1.0; 64]).is_err());
    assert!(zero_phase_filter(&sig(x), &[1.0; 3]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decomposition_invariants(
        seed in any::<u64>(),
        n in 9usize..200,
        m in 1usize..5,
        strategy in prop_oneof![
            Just(BandStrategy::Equal),
            Just(BandStrategy::Dyadic),
            Just(BandStrategy::EqualEnergy),
        ],
        gas_route in any::<bool>(),
    ) {
        let x = random_vec(&mut rng(seed), n);
        let plan = plan_bands(&fast_dct2(&x).unwrap(), strategy, m).unwrap();
        let route = if gas_route { Route::Gas } else { Route::Fsas };
        let d = decompose(&sig(x.clone()), &plan, route).unwrap();
        prop_assert_eq!(d.band_count(), m);
        check_invariants(&x, &d);
    }

    #[test]
    fn plan_covers_every_nonzero_bin(n in 3usize..300, m in 1usize..8) {
        prop_assume!(n > m);
        let plan = plan_bands(&vec![1.0; n], BandStrategy::Equal, m).unwrap();
        for k in 1..n {
            let b = plan.band_of(k).unwrap();
            prop_assert!(plan.band(b).contains(&k));
        }
        prop_assert_eq!(plan.band_of(0), None);
    }
}
