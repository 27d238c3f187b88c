/* Remainder-table long division for denominators that fit a flat table. */
#define PY_SSIZE_T_CLEAN
#include <Python.h>
#include <stdint.h>
#include <stdlib.h>

/* long_division(rem, den, limit) -> (digits, start) or None
 *
 * Emits fractional digits of rem/den until a remainder repeats or hits zero.
 * start is the index where the repetend begins, -1 for a terminating
 * expansion. None means more than `limit` digits would be needed.
 * Caller guarantees 0 <= rem < den <= 2**32 and limit < 2**32.
 */
static PyObject *
long_division(PyObject *self, PyObject *args)
{
    unsigned long long rem, den;
    Py_ssize_t limit;
    if (!PyArg_ParseTuple(args, "KKn", &rem, &den, &limit))
        return NULL;
    if (den == 0 || rem >= den || den > (1ULL << 32) || limit < 0 || limit >= (Py_ssize_t)UINT32_MAX) {
        PyErr_SetString(PyExc_ValueError, "arguments outside the table range");
        return NULL;
    }
    Py_ssize_t cap = (Py_ssize_t)den < limit ? (Py_ssize_t)den : limit;
    uint32_t *seen = calloc((size_t)den, sizeof(uint32_t));
    char *buf = malloc((size_t)cap + 1);
    if (seen == NULL || buf == NULL) {
        free(seen);
        free(buf);
        return PyErr_NoMemory();
    }
    Py_ssize_t n = 0;
    int exceeded = 0;
    Py_BEGIN_ALLOW_THREADS
    while (rem != 0 && seen[rem] == 0) {
        if (n >= limit) {
            exceeded = 1;
            break;
        }
        seen[rem] = (uint32_t)(n + 1);
        rem *= 10;
        buf[n++] = (char)('0' + rem / den);
        rem %= den;
    }
    Py_END_ALLOW_THREADS
    PyObject *result;
    if (exceeded) {
        Py_INCREF(Py_None);
        result = Py_None;
    } else {
        Py_ssize_t start = rem ? (Py_ssize_t)seen[rem] - 1 : -1;
        result = Py_BuildValue("(s#n)", buf, n, start);
    }
    free(seen);
    free(buf);
    return result;
}

static PyMethodDef methods[] = {
    {"long_division", long_division, METH_VARARGS, "Long division with remainder-cycle detection."},
    {NULL, NULL, 0, NULL},
};

static struct PyModuleDef module = {PyModuleDef_HEAD_INIT, "_longdiv", NULL, -1, methods};

PyMODINIT_FUNC
PyInit__longdiv(void)
{
    return PyModule_Create(&module);
}
