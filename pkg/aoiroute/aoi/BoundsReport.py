from aoiroute.model.Model import Model


class BoundsReport(Model):
    global_lower: float
    f1_lower: float
    f1_upper: float

    class Config:
        allow_mutation = False
