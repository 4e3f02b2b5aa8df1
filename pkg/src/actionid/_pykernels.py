"""Pure-numpy implementations of the convolution/pooling hot kernels.

These are the fallback used when the compiled extension is unavailable
(see `actionid.kernels` for backend selection). Layout is NHWC throughout;
convolutions are stride 1.
"""

import numpy as np


def im2col(x: np.ndarray, kh: int, kw: int, pad: int) -> np.ndarray:
    """Expand sliding kh x kw patches of `x` (N,H,W,C) into a GEMM-ready
    matrix of shape (N*OH*OW, kh*kw*C)."""
    n, h, w, c = x.shape
    oh = h + 2 * pad - kh + 1
    ow = w + 2 * pad - kw + 1
    if pad:
        xp = np.zeros((n, h + 2 * pad, w + 2 * pad, c), dtype=x.dtype)
        xp[:, pad : pad + h, pad : pad + w, :] = x
    else:
        xp = np.ascontiguousarray(x)
    s0, s1, s2, s3 = xp.strides
    windows = np.lib.stride_tricks.as_strided(
        xp,
        shape=(n, oh, ow, kh, kw, c),
        strides=(s0, s1, s2, s1, s2, s3),
        writeable=False,
    )
    return np.ascontiguousarray(windows).reshape(n * oh * ow, kh * kw * c)


def col2im_add(
    cols: np.ndarray, n: int, h: int, w: int, c: int, kh: int, kw: int, pad: int
) -> np.ndarray:
    """Scatter-add a column matrix (as produced by `im2col`) back onto an
    (N,H,W,C) gradient raster. Inverse-adjoint of im2col."""
    oh = h + 2 * pad - kh + 1
    ow = w + 2 * pad - kw + 1
    dxp = np.zeros((n, h + 2 * pad, w + 2 * pad, c), dtype=cols.dtype)
    cols6 = cols.reshape(n, oh, ow, kh, kw, c)
    for i in range(kh):
        for j in range(kw):
            dxp[:, i : i + oh, j : j + ow, :] += cols6[:, :, :, i, j, :]
    if pad:
        return np.ascontiguousarray(dxp[:, pad : pad + h, pad : pad + w, :])
    return dxp


def maxpool2x2_forward(x: np.ndarray):
    """2x2/stride-2 max pool (floor mode). Returns (out, argmax) where
    argmax in {0,1,2,3} identifies the winning cell of each window."""
    n, h, w, c = x.shape
    oh, ow = h // 2, w // 2
    xv = x[:, : oh * 2, : ow * 2, :].reshape(n, oh, 2, ow, 2, c)
    xw = xv.transpose(0, 1, 3, 5, 2, 4).reshape(n, oh, ow, c, 4)
    idx = np.argmax(xw, axis=4).astype(np.uint8)
    out = np.take_along_axis(xw, idx[..., None].astype(np.intp), axis=4)[..., 0]
    return np.ascontiguousarray(out), idx


def maxpool2x2_backward(
    dout: np.ndarray, idx: np.ndarray, h: int, w: int
) -> np.ndarray:
    """Route pooled gradients back to the argmax positions of an (N,H,W,C)
    input. Rows/columns cropped by floor-mode pooling receive zero."""
    n, oh, ow, c = dout.shape
    scattered = np.zeros((n, oh, ow, c, 4), dtype=dout.dtype)
    np.put_along_axis(
        scattered, idx[..., None].astype(np.intp), dout[..., None], axis=4
    )
    dx = np.zeros((n, h, w, c), dtype=dout.dtype)
    dx[:, : oh * 2, : ow * 2, :] = (
        scattered.reshape(n, oh, ow, c, 2, 2)
        .transpose(0, 1, 4, 2, 5, 3)
        .reshape(n, oh * 2, ow * 2, c)
    )
    return dx
