mod common;

macro_rules! suite {
    ($($name:ident),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                if let Err(e) = common::$name() {
                    panic!("{e}");
                }
            }
        )*
    };
}

suite!(
    ring_laws,
    finite_q_binomial,
    reciprocal_q_binomial,
    q_binomial_theorem,
    shifted_pochhammer,
    rising_power_fact,
    swap_lemma,
    gaussian_binomials,
    partition_invariants,
    weight_expressions,
);
