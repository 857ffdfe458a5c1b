"""FastAPI front end over the library.

Run with:  uvicorn nsgps.service:app
Domain errors become 400 responses carrying the error class name; malformed
payloads are rejected by pydantic with 422 as usual.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import api
from . import schemas
from .errors import NumericalSemigroupError

app = FastAPI(title="nsgps", description="numerical semigroup computations")


@app.exception_handler(NumericalSemigroupError)
async def domain_error(request: Request, exc: NumericalSemigroupError):
    return JSONResponse(status_code=400,
                        content={"error": type(exc).__name__, "detail": str(exc)})


@app.post("/info", response_model=schemas.InfoResponse)
def info(req: schemas.SemigroupRequest):
    return api.info(api.semigroup(req.generators))


@app.post("/apery")
def apery(req: schemas.AperyRequest):
    return api.apery(api.semigroup(req.generators), req.n)


@app.post("/classify", response_model=schemas.ClassifyResponse)
def classify_(req: schemas.SemigroupRequest):
    return api.classification(api.semigroup(req.generators))


@app.post("/decompose", response_model=schemas.DecomposeResponse)
def decompose(req: schemas.SemigroupRequest):
    return api.decompose(api.semigroup(req.generators))


@app.post("/oversemigroups")
def oversemigroups(req: schemas.SemigroupRequest):
    return api.oversemigroups(api.semigroup(req.generators))


@app.post("/med")
def med(req: schemas.SemigroupRequest):
    return api.med(api.semigroup(req.generators))


@app.post("/free")
def free(req: schemas.SemigroupRequest):
    return api.free(api.semigroup(req.generators))


@app.post("/presentation", response_model=schemas.PresentationResponse)
def presentation(req: schemas.SemigroupRequest):
    return api.presentation(api.semigroup(req.generators))


@app.post("/betti")
def betti(req: schemas.SemigroupRequest):
    return api.betti(api.semigroup(req.generators))


@app.post("/factorize")
def factorize(req: schemas.ElementRequest):
    return api.factorize(api.semigroup(req.generators), req.element)


@app.post("/invariants")
def invariants(req: schemas.InvariantsRequest):
    return api.invariant_report(api.semigroup(req.generators), req.element)


@app.post("/enumerate")
def enumerate_(req: schemas.EnumerateRequest):
    try:
        return api.enumerate_semigroups(
            genus=req.genus, frobenius=req.frobenius,
            irreducible=req.irreducible, free_f=req.free, delta=req.delta,
            count_only=req.count_only, limit=req.limit)
    except ValueError as exc:
        return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.post("/curve")
def curve(req: schemas.CurveRequest):
    return api.curve(req.r, dual=req.dual)
