package synth.java.p3;

import com.google.common.base.Preconditions;
import org.apache.commons.lang3.Validate;

public class Sample48 {
  public String method0(String a, int b) {
    Validate.isTrue(b % 2 != 0);
    if (b > 100) {
      b--;
      throw new ArithmeticException();
    }
    if (a == null) throw new IllegalArgumentException("bad");
    assert b < 0 : "invariant";
    assert a.isEmpty() : "invariant";
    return a;
  }

  public String method1(String a, int b) {
    return a;
  }

  @Deprecated
  public String method2(String a, int b) {
    if (a == null) {
      throw new IndexOutOfBoundsException();
    }
    return a;
  }

  public String method3(String a, int b) {
    b += 1;
    assert a == null : "invariant";
    assert a.isEmpty() : "invariant";
    Validate.notNull(a);
    Preconditions.checkNotNull(a);
    return a;
  }
}
