# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled convolution/pooling hot kernels (NHWC, stride-1 convs).

Mirrors `actionid._pykernels`; the dispatcher in `actionid.kernels` picks
whichever backend is available.
"""

import numpy as np

cimport cython
cimport numpy as cnp

ctypedef fused floating:
    float
    double


def im2col(floating[:, :, :, ::1] x, int kh, int kw, int pad):
    cdef Py_ssize_t n = x.shape[0], h = x.shape[1], w = x.shape[2], c = x.shape[3]
    cdef Py_ssize_t oh = h + 2 * pad - kh + 1
    cdef Py_ssize_t ow = w + 2 * pad - kw + 1
    dtype = np.float32 if floating is float else np.float64
    out = np.zeros((n * oh * ow, kh * kw * c), dtype=dtype)
    cdef floating[:, ::1] cols = out
    cdef Py_ssize_t b, i, j, ki, kj, cc, row, col0, yy, xx
    with nogil:
        for b in range(n):
            for i in range(oh):
                for j in range(ow):
                    row = (b * oh + i) * ow + j
                    for ki in range(kh):
                        yy = i + ki - pad
                        if yy < 0 or yy >= h:
                            continue
                        for kj in range(kw):
                            xx = j + kj - pad
                            if xx < 0 or xx >= w:
                                continue
                            col0 = (ki * kw + kj) * c
                            for cc in range(c):
                                cols[row, col0 + cc] = x[b, yy, xx, cc]
    return out


def col2im_add(floating[:, ::1] cols, int n, int h, int w, int c,
               int kh, int kw, int pad):
    cdef Py_ssize_t oh = h + 2 * pad - kh + 1
    cdef Py_ssize_t ow = w + 2 * pad - kw + 1
    dtype = np.float32 if floating is float else np.float64
    out = np.zeros((n, h, w, c), dtype=dtype)
    cdef floating[:, :, :, ::1] dx = out
    cdef Py_ssize_t b, i, j, ki, kj, cc, row, col0, yy, xx
    with nogil:
        for b in range(n):
            for i in range(oh):
                for j in range(ow):
                    row = (b * oh + i) * ow + j
                    for ki in range(kh):
                        yy = i + ki - pad
                        if yy < 0 or yy >= h:
                            continue
                        for kj in range(kw):
                            xx = j + kj - pad
                            if xx < 0 or xx >= w:
                                continue
                            col0 = (ki * kw + kj) * c
                            for cc in range(c):
                                dx[b, yy, xx, cc] += cols[row, col0 + cc]
    return out


def maxpool2x2_forward(floating[:, :, :, ::1] x):
    cdef Py_ssize_t n = x.shape[0], h = x.shape[1], w = x.shape[2], c = x.shape[3]
    cdef Py_ssize_t oh = h // 2, ow = w // 2
    dtype = np.float32 if floating is float else np.float64
    out_arr = np.empty((n, oh, ow, c), dtype=dtype)
    idx_arr = np.empty((n, oh, ow, c), dtype=np.uint8)
    cdef floating[:, :, :, ::1] out = out_arr
    cdef unsigned char[:, :, :, ::1] idx = idx_arr
    cdef Py_ssize_t b, i, j, cc
    cdef floating v, best
    cdef unsigned char k, bestk
    with nogil:
        for b in range(n):
            for i in range(oh):
                for j in range(ow):
                    for cc in range(c):
                        best = x[b, 2 * i, 2 * j, cc]
                        bestk = 0
                        v = x[b, 2 * i, 2 * j + 1, cc]
                        if v > best:
                            best = v; bestk = 1
                        v = x[b, 2 * i + 1, 2 * j, cc]
                        if v > best:
                            best = v; bestk = 2
                        v = x[b, 2 * i + 1, 2 * j + 1, cc]
                        if v > best:
                            best = v; bestk = 3
                        out[b, i, j, cc] = best
                        idx[b, i, j, cc] = bestk
    return out_arr, idx_arr


def maxpool2x2_backward(floating[:, :, :, ::1] dout,
                        unsigned char[:, :, :, ::1] idx, int h, int w):
    cdef Py_ssize_t n = dout.shape[0], oh = dout.shape[1], ow = dout.shape[2]
    cdef Py_ssize_t c = dout.shape[3]
    dtype = np.float32 if floating is float else np.float64
    out = np.zeros((n, h, w, c), dtype=dtype)
    cdef floating[:, :, :, ::1] dx = out
    cdef Py_ssize_t b, i, j, cc
    cdef unsigned char k
    with nogil:
        for b in range(n):
            for i in range(oh):
                for j in range(ow):
                    for cc in range(c):
                        k = idx[b, i, j, cc]
                        dx[b, 2 * i + (k >> 1), 2 * j + (k & 1), cc] += dout[b, i, j, cc]
    return out
