use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// The generator handed out by a [`RandomStream`].
pub type StreamRng = ChaCha12Rng;

/// A counter-based random stream identified by `(seed, index)`.
///
/// The seed is expanded into the ChaCha key and the index selects the ChaCha
/// stream, so identical pairs reproduce bit-identical sequences and distinct
/// pairs give independent ones. [`RandomStream::split`] derives child streams
/// deterministically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RandomStream {
    seed: u64,
    index: u64,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl RandomStream {
    pub fn new(seed: u64, index: u64) -> Self {
        Self { seed, index }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn rng(&self) -> StreamRng {
        let mut state = self.seed;
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        let mut rng = ChaCha12Rng::from_seed(key);
        rng.set_stream(self.index);
        rng
    }

    /// Child stream `j`; its key is derived from both parent coordinates.
    pub fn split(&self, j: u64) -> RandomStream {
        let mut state = self.seed ^ 0xD1B5_4A32_D192_ED03;
        let a = splitmix64(&mut state);
        let mut state = a ^ self.index;
        let seed = splitmix64(&mut state);
        RandomStream { seed, index: j }
    }
}
