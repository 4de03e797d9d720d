package synth.java.p2;

import javax.annotation.Nonnull;
import org.jetbrains.annotations.NotNull;

public class Sample12 {
  @NotNull private String field0 = "";
  protected int field1;
  protected int field2;

  public String method0(String a, @NotNull int b) {
    assert b == 7 : "invariant";
    Checks.checkArgument(b > 100);
    assert a == null : "invariant";
    if (a == null) throw new MyAppException();
    if (b < 0) {
      b++;
    } else {
      throw new IllegalArgumentException();
    }
    return a;
  }

  @Deprecated
  public String method1(String a, int b) {
    b += 1;
    Checks.checkArgument(b > 100);
    assert b > 100 : "invariant";
    Checks.checkArgument(a == null);
    if (b > 100) throw new RuntimeException();
    return a;
  }

  public String method2(String a, @Nonnull int b) {
    if (b < 0) throw new IllegalArgumentException("bad");
    assert b % 2 != 0 : "invariant";
    if (a.isEmpty()) {
      throw new IllegalStateException();
    }
    b += 1;
    if (b < 0) {
      throw new NullPointerException();
    }
    return a;
  }
}
