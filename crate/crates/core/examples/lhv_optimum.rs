//! Why shared classical randomness cannot beat payoff 3: every one of the
//! 16 deterministic strategy pairs satisfies q00 <= q01 + q10 + q11, and so
//! does every mixture of them.
//!
//! ```sh
//! cargo run -p entangle-coord --example lhv_optimum --release
//! ```

use entangle_coord::bounds::{
    classical_bound, enumerate_deterministic_pairs, lhv_hill_climb, lhv_profile, lhv_supremum_payoff, LhvMixture,
};
use entangle_coord::classical::{generate_sequences, ChannelMode, ClassicalConfig};

fn main() -> entangle_coord::Result<()> {
    println!("idx  m1(0) m1(1) m2(0) m2(1)  d00 d01 d10 d11  bound");
    for (pair, profile) in enumerate_deterministic_pairs() {
        let d = pair.indicators();
        println!(
            "{:>3}    {}     {}     {}     {}     {}   {}   {}   {}   {}",
            pair.index(),
            pair.one[0],
            pair.one[1],
            pair.two[0],
            pair.two[1],
            d[0],
            d[1],
            d[2],
            d[3],
            classical_bound(&profile).holds
        );
    }

    let opt = lhv_supremum_payoff()?;
    println!("\nsupremum {} reached by {:?}", opt.supremum, lhv_profile(&opt.witness).to_array());

    // the shared-sequence construction is itself such a mixture
    let set = generate_sequences(&ClassicalConfig::new(1000, 0.1, ChannelMode::DisjointFlips, 5))?;
    let mix = LhvMixture::from_sequences(&set);
    println!("sequence construction as a mixture: {:?}", lhv_profile(&mix).to_array());

    println!("hill climb over the simplex: best {:.9}", lhv_hill_climb(1000, 2000, 0));
    Ok(())
}
