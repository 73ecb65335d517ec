//! Dense numeric arrays and the two value kinds that flow through a
//! network: a [`Clip`] with a time axis and a single [`Step`] without one.
//!
//! Dimension order is fixed: clips are `(B, C, T, S...)` and steps are
//! `(B, C, S...)`, where `S...` are zero or more spatial extents.

use crate::error::{Error, Result};

/// Row-major array of 64-bit floats.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        Tensor {
            shape: shape.to_vec(),
            data: vec![0.0; shape.iter().product()],
        }
    }

    pub fn filled(shape: &[usize], v: f64) -> Self {
        Tensor {
            shape: shape.to_vec(),
            data: vec![v; shape.iter().product()],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<f64>) -> Result<Self> {
        let want: usize = shape.iter().product();
        if want != data.len() {
            return Err(Error::Shape(format!(
                "shape {:?} wants {} elements, got {}",
                shape,
                want,
                data.len()
            )));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    /// Flat offset of a multi-index.
    pub fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut off = 0;
        for (i, &d) in idx.iter().enumerate() {
            debug_assert!(d < self.shape[i]);
            off = off * self.shape[i] + d;
        }
        off
    }

    pub fn at(&self, idx: &[usize]) -> f64 {
        self.data[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: f64) {
        let off = self.flat(idx);
        self.data[off] = v;
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

/// Visit all multi-indices of `dims` in row-major order.
pub fn for_each_index(dims: &[usize], mut f: impl FnMut(&[usize])) {
    if dims.iter().any(|&d| d == 0) {
        return;
    }
    let mut idx = vec![0usize; dims.len()];
    'outer: loop {
        f(&idx);
        for k in (0..dims.len()).rev() {
            idx[k] += 1;
            if idx[k] < dims[k] {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
}

/// A batch of temporal sequences, shape `(B, C, T, S...)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Clip {
    t: Tensor,
}

impl Clip {
    pub fn new(t: Tensor) -> Result<Self> {
        if t.rank() < 3 {
            return Err(Error::Shape(format!(
                "clip needs at least (B, C, T), got shape {:?}",
                t.shape()
            )));
        }
        if t.shape().iter().any(|&d| d == 0) {
            return Err(Error::Shape(format!(
                "clip dimensions must be >= 1, got {:?}",
                t.shape()
            )));
        }
        Ok(Clip { t })
    }

    pub fn zeros(batch: usize, channels: usize, time: usize, spatial: &[usize]) -> Self {
        let mut shape = vec![batch, channels, time];
        shape.extend_from_slice(spatial);
        Clip {
            t: Tensor::zeros(&shape),
        }
    }

    pub fn batch(&self) -> usize {
        self.t.shape()[0]
    }

    pub fn channels(&self) -> usize {
        self.t.shape()[1]
    }

    pub fn time(&self) -> usize {
        self.t.shape()[2]
    }

    pub fn spatial(&self) -> &[usize] {
        &self.t.shape()[3..]
    }

    /// `[B, C, S...]`: the shape of one time column.
    pub fn step_shape(&self) -> Vec<usize> {
        let mut s = vec![self.batch(), self.channels()];
        s.extend_from_slice(self.spatial());
        s
    }

    pub fn tensor(&self) -> &Tensor {
        &self.t
    }

    pub fn tensor_mut(&mut self) -> &mut Tensor {
        &mut self.t
    }

    pub fn into_tensor(self) -> Tensor {
        self.t
    }

    /// Copy out the column at time `t`.
    pub fn column(&self, t: usize) -> Step {
        let (b, c, time) = (self.batch(), self.channels(), self.time());
        assert!(t < time, "column {} out of range (T={})", t, time);
        let ps: usize = self.spatial().iter().product();
        let mut out = Vec::with_capacity(b * c * ps);
        for bi in 0..b {
            for ci in 0..c {
                let off = ((bi * c + ci) * time + t) * ps;
                out.extend_from_slice(&self.t.data()[off..off + ps]);
            }
        }
        let mut shape = vec![b, c];
        shape.extend_from_slice(self.spatial());
        Step {
            t: Tensor::from_vec(&shape, out).expect("column shape consistent"),
        }
    }

    pub fn columns(&self) -> Vec<Step> {
        (0..self.time()).map(|t| self.column(t)).collect()
    }

    /// Stack equally-shaped steps along a new time axis.
    pub fn from_steps(steps: &[Step]) -> Result<Clip> {
        let first = steps.first().ok_or_else(|| {
            Error::Shape("cannot build a clip from zero steps".to_string())
        })?;
        let shape = first.tensor().shape().to_vec();
        for (i, s) in steps.iter().enumerate() {
            if s.tensor().shape() != shape.as_slice() {
                return Err(Error::Shape(format!(
                    "step {} has shape {:?}, expected {:?}",
                    i,
                    s.tensor().shape(),
                    shape
                )));
            }
        }
        let (b, c) = (shape[0], shape[1]);
        let spatial = &shape[2..];
        let ps: usize = spatial.iter().product();
        let time = steps.len();
        let mut clip_shape = vec![b, c, time];
        clip_shape.extend_from_slice(spatial);
        let mut data = vec![0.0; b * c * time * ps];
        for (t, s) in steps.iter().enumerate() {
            for bi in 0..b {
                for ci in 0..c {
                    let src = (bi * c + ci) * ps;
                    let dst = ((bi * c + ci) * time + t) * ps;
                    data[dst..dst + ps]
                        .copy_from_slice(&s.tensor().data()[src..src + ps]);
                }
            }
        }
        Clip::new(Tensor::from_vec(&clip_shape, data)?)
    }
}

/// One time step without a time axis, shape `(B, C, S...)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Step {
    t: Tensor,
}

impl Step {
    pub fn new(t: Tensor) -> Result<Self> {
        if t.rank() < 2 {
            return Err(Error::Shape(format!(
                "step needs at least (B, C), got shape {:?}",
                t.shape()
            )));
        }
        if t.shape().iter().any(|&d| d == 0) {
            return Err(Error::Shape(format!(
                "step dimensions must be >= 1, got {:?}",
                t.shape()
            )));
        }
        Ok(Step { t })
    }

    /// `shape` is `[B, C, S...]`.
    pub fn zeros(shape: &[usize]) -> Self {
        assert!(shape.len() >= 2);
        Step {
            t: Tensor::zeros(shape),
        }
    }

    pub fn batch(&self) -> usize {
        self.t.shape()[0]
    }

    pub fn channels(&self) -> usize {
        self.t.shape()[1]
    }

    pub fn spatial(&self) -> &[usize] {
        &self.t.shape()[2..]
    }

    pub fn tensor(&self) -> &Tensor {
        &self.t
    }

    pub fn tensor_mut(&mut self) -> &mut Tensor {
        &mut self.t
    }

    pub fn into_tensor(self) -> Tensor {
        self.t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_indexing_row_major() {
        let t = Tensor::from_vec(&[2, 3], (0..6).map(|v| v as f64).collect()).unwrap();
        assert_eq!(t.at(&[0, 0]), 0.0);
        assert_eq!(t.at(&[0, 2]), 2.0);
        assert_eq!(t.at(&[1, 0]), 3.0);
        assert_eq!(t.at(&[1, 2]), 5.0);
    }

    #[test]
    fn from_vec_rejects_bad_length() {
        assert!(Tensor::from_vec(&[2, 2], vec![1.0]).is_err());
    }

    #[test]
    fn clip_columns_round_trip() {
        let data: Vec<f64> = (0..2 * 2 * 3 * 2).map(|v| v as f64).collect();
        let clip = Clip::new(Tensor::from_vec(&[2, 2, 3, 2], data).unwrap()).unwrap();
        let cols = clip.columns();
        assert_eq!(cols.len(), 3);
        let rebuilt = Clip::from_steps(&cols).unwrap();
        assert_eq!(rebuilt, clip);
    }

    #[test]
    fn column_extracts_right_values() {
        // shape (1, 2, 2): values [[0, 1], [2, 3]] over (c, t)
        let clip =
            Clip::new(Tensor::from_vec(&[1, 2, 2], vec![0.0, 1.0, 2.0, 3.0]).unwrap()).unwrap();
        assert_eq!(clip.column(0).tensor().data(), &[0.0, 2.0]);
        assert_eq!(clip.column(1).tensor().data(), &[1.0, 3.0]);
    }

    #[test]
    fn for_each_index_covers_all() {
        let mut seen = Vec::new();
        for_each_index(&[2, 3], |idx| seen.push((idx[0], idx[1])));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], (0, 0));
        assert_eq!(seen[5], (1, 2));
    }

    #[test]
    fn for_each_index_empty_dims() {
        let mut count = 0;
        for_each_index(&[], |_| count += 1);
        assert_eq!(count, 1);
        for_each_index(&[2, 0], |_| count += 1);
        assert_eq!(count, 1);
    }
}
