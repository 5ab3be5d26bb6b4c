mod common;

#[test]
fn eight_fillings_over_3124() {
    common::naf_3124().unwrap();
}

#[test]
fn nine_coinversion_free_fillings_sum_to_e21() {
    common::coinversion_free_132().unwrap();
}

#[test]
fn seven_term_t_atom() {
    common::seven_term_atom().unwrap();
}
