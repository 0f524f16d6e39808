fn main() {
    use std::time::Instant;
    let n = 512usize;
    let keys = {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        (0..n).map(|_| rng.gen_range(1..=n as i64)).collect::<Vec<i64>>()
    };
    let mut a = keys.clone();
    let mut aux = vec![0i64; n];
    let t = Instant::now();
    idemperm::transforms::stable_rank_permutation(a.as_slice(), aux.as_mut_slice());
    println!("stable_rank: {:?}", t.elapsed());
    let t = Instant::now();
    idemperm::transforms::apply_forward(a.as_mut_slice(), aux.as_mut_slice());
    println!("apply_forward: {:?}", t.elapsed());
    let t = Instant::now();
    let mut ranks = vec![0i64; n];
    idemperm::transforms::map_to_perm_out(a.as_slice(), ranks.as_mut_slice());
    println!("map_to_perm_out: {:?}", t.elapsed());
    let t = Instant::now();
    idemperm::transforms::apply_inverse(a.as_mut_slice(), ranks.as_mut_slice());
    println!("apply_inverse: {:?}", t.elapsed());
    println!("sorted: {}", a.windows(2).all(|w| w[0] <= w[1]));
}
