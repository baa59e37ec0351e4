use std::cell::RefCell;
use std::sync::Arc;

use rustfft::{Fft, FftNum, FftPlanner};

/// Floating scalar the whole workspace is generic over. f32 is the working
/// precision; f64 backs gradient checking, where central differences need
/// the extra mantissa bits.
pub trait Real:
    num_traits::Float + FftNum + Default + std::fmt::Display + std::iter::Sum + 'static
{
    /// Bytes per value in serialized payloads.
    const WIDTH: usize;

    fn of(x: f64) -> Self;
    fn to64(self) -> f64;
    fn write_le(self, out: &mut Vec<u8>);
    fn read_le(bytes: &[u8]) -> Self;
    /// Cached FFT plan for a 1-D transform of `len` points.
    fn plan_fft(len: usize, inverse: bool) -> Arc<dyn Fft<Self>>;
}

thread_local! {
    static PLANNER_F32: RefCell<FftPlanner<f32>> = RefCell::new(FftPlanner::new());
    static PLANNER_F64: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

impl Real for f32 {
    const WIDTH: usize = 4;

    fn of(x: f64) -> Self {
        x as f32
    }

    fn to64(self) -> f64 {
        self as f64
    }

    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }

    fn read_le(bytes: &[u8]) -> Self {
        f32::from_le_bytes(bytes[..4].try_into().unwrap())
    }

    fn plan_fft(len: usize, inverse: bool) -> Arc<dyn Fft<Self>> {
        PLANNER_F32.with(|p| {
            let mut p = p.borrow_mut();
            if inverse {
                p.plan_fft_inverse(len)
            } else {
                p.plan_fft_forward(len)
            }
        })
    }
}

impl Real for f64 {
    const WIDTH: usize = 8;

    fn of(x: f64) -> Self {
        x
    }

    fn to64(self) -> f64 {
        self
    }

    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }

    fn read_le(bytes: &[u8]) -> Self {
        f64::from_le_bytes(bytes[..8].try_into().unwrap())
    }

    fn plan_fft(len: usize, inverse: bool) -> Arc<dyn Fft<Self>> {
        PLANNER_F64.with(|p| {
            let mut p = p.borrow_mut();
            if inverse {
                p.plan_fft_inverse(len)
            } else {
                p.plan_fft_forward(len)
            }
        })
    }
}
